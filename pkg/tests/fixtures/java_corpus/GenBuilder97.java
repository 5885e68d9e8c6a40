package org.sample.util;

/** Simple javadoc. */
public class GenBuilder97 {
  private StringBuilder buffer = new StringBuilder();

  public GenBuilder97 append(String part) {
    buffer.append(part).append(';');
    return this;
  }

  public String build() {
    return buffer.toString();
  }
}
