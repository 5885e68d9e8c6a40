package com.acme.core;

import java.util.Objects;

public class GenRepository44 {
  private final java.util.Map<String, Integer> items = new java.util.HashMap<>();

  public void store(String key, Integer value) {
    items.put(key, value);
  }

  public Integer fetch(String key) {
    if (!items.containsKey(key)) { throw new IllegalArgumentException(key); }
    return items.get(key);
  }

  public int size() { return items.size(); }
}
