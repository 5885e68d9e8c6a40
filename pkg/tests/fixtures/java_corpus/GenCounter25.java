package org.sample.util;

/** Simple javadoc. */
public class GenCounter25 {
  private int count;

  public void increment() {
    count++;
  }

  public int current() {
    return count;
  }
}
