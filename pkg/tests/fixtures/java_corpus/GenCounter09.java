package com.acme.core;

/** Simple javadoc. */
public class GenCounter09 {
  private volatile int count;

  public void increment() {
    count++;
  }

  public int current() {
    return count;
  }
}
