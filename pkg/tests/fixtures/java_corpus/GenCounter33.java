package org.sample.util;

/** Simple javadoc. */
public class GenCounter33 {
  private volatile int count;

  public void increment() {
    count++;
  }

  public int current() {
    return count;
  }
}
