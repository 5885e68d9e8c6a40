package com.acme.io;

/* multi
 * line
 * block */
public class GenRepository59 {
  private final java.util.Map<String, java.util.List<String>> items = new java.util.HashMap<>();

  public void store(String key, java.util.List<String> value) {
    items.put(key, value);
  }

  public java.util.List<String> fetch(String key) {
    if (!items.containsKey(key)) { throw new IllegalArgumentException(key); }
    return items.get(key);
  }

  public int size() { return items.size(); }
}
