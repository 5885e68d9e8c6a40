package com.acme.io;

import java.util.Objects;

public class GenCounter24 {
  private volatile int count = 0;

  public void increment() {
    count++;
  }

  public int current() {
    return count;
  }
}
