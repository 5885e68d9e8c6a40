package com.acme.core;

import java.util.Objects;

public class GenCounter08 {
  private int count = 0;

  public void increment() {
    count++;
  }

  public int current() {
    return count;
  }
}
