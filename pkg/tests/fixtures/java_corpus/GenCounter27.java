package org.sample.util;

/* multi
 * line
 * block */
public class GenCounter27 {
  private volatile int count;

  public void increment() {
    count++;
  }

  public int current() {
    return count;
  }
}
