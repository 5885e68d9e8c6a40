package org.sample.util;

import java.util.Objects;

public class GenCounter36 {
  private volatile int count = 0;

  public void increment() {
    count++;
  }

  public int current() {
    return count;
  }
}
