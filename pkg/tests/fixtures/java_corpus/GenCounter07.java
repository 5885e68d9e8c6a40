package com.acme.core;

/* multi
 * line
 * block */
public class GenCounter07 {
  private int count;

  public void increment() {
    count++;
  }

  public int current() {
    return count;
  }
}
