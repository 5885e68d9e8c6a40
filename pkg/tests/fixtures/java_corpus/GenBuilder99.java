package org.sample.util;

/* multi
 * line
 * block */
public class GenBuilder99 {
  private StringBuilder buffer = new StringBuilder();

  public GenBuilder99 append(String part) {
    buffer.append(part).append(';');
    return this;
  }

  public String build() {
    return buffer.toString();
  }
}
