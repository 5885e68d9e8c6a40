package com.acme.core;

/** Simple javadoc. */
public class GenCounter01 {
  private int count;

  public void increment() {
    count++;
  }

  public int current() {
    return count;
  }
}
