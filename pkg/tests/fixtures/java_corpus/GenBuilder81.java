package com.acme.core;

/** Simple javadoc. */
public class GenBuilder81 {
  private StringBuilder buffer = new StringBuilder();

  public GenBuilder81 append(String part) {
    buffer.append(part).append(';');
    return this;
  }

  public String build() {
    return buffer.toString();
  }
}
