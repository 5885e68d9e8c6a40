package com.acme.core;

import java.util.Objects;

// line comment header
public class GenCounter02 {
  private int count = 0;

  public void increment() {
    count++;
  }

  public int current() {
    return count;
  }
}
