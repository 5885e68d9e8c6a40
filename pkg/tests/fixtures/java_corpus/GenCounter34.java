package org.sample.util;

import java.util.Objects;

// line comment header
public class GenCounter34 {
  private int count = 0;

  public void increment() {
    count++;
  }

  public int current() {
    return count;
  }
}
