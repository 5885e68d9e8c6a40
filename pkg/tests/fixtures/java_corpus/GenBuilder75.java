package com.acme.core;

/* multi
 * line
 * block */
public class GenBuilder75 {
  private StringBuilder buffer = new StringBuilder();

  public GenBuilder75 append(String part) {
    buffer.append(part).append(';');
    return this;
  }

  public String build() {
    return buffer.toString();
  }
}
