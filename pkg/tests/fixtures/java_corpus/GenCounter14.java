package com.acme.io;

import java.util.Objects;

// line comment header
public class GenCounter14 {
  private int count = 0;

  public void increment() {
    count++;
  }

  public int current() {
    return count;
  }
}
