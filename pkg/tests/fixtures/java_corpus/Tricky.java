package com.example.tricky;

public class Tricky {
  // string with braces and separators: "{};()"
  private String odd = "{ not a block; (really) }";
  private char brace = '{';
  private char escaped = '\'';
  private String path = "C:\\temp\\file";

  /* commented out:
     public void ghost() { throw new IllegalStateException("no"); }
  */
  public String quote() {
    return "he said \"hi; {wave}\"";
  }

  public int weird(int a, int b) {
    int x = a > b ? a : b; // ternary with > and <
    return x;
  }
}
