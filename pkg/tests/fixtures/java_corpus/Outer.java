package com.example.nesting;

public class Outer {
  private int depth;

  public class Inner {
    public int depth() { return depth + 1; }
  }

  public static class Nested {
    static final String NAME = "nested";

    interface Callback {
      void done(String result);
    }
  }

  void touch() { depth++; }
}
