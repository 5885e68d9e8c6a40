package com.acme.io;

/* multi
 * line
 * block */
public class GenBuilder95 {
  private StringBuilder buffer = new StringBuilder();

  public GenBuilder95 append(String part) {
    buffer.append(part).append(';');
    return this;
  }

  public String build() {
    return buffer.toString();
  }
}
