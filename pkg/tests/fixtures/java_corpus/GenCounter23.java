package com.acme.io;

/* multi
 * line
 * block */
public class GenCounter23 {
  private int count;

  public void increment() {
    count++;
  }

  public int current() {
    return count;
  }
}
