package org.sample.util;

import java.util.Objects;

// line comment header
public class GenBuilder102 {
  private StringBuilder buffer = new StringBuilder();

  public GenBuilder102 append(String part) {
    buffer.append(part).append(';');
    return this;
  }

  public String build() {
    return buffer.toString();
  }
}
