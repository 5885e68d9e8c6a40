package org.sample.util;

/** Simple javadoc. */
public class GenRepository61 {
  private final java.util.Map<String, String> items = new java.util.HashMap<>();

  public void store(String key, String value) {
    items.put(key, value);
  }

  public String fetch(String key) {
    if (!items.containsKey(key)) { throw new IllegalArgumentException(key); }
    return items.get(key);
  }

  public int size() { return items.size(); }
}
