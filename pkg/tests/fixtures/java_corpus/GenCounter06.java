package com.acme.core;

import java.util.Objects;

// line comment header
public class GenCounter06 {
  private volatile int count = 0;

  public void increment() {
    count++;
  }

  public int current() {
    return count;
  }
}
