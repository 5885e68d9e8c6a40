package org.sample.util;

import java.util.Objects;

// line comment header
public class GenBuilder98 {
  private StringBuilder buffer = new StringBuilder();

  public GenBuilder98 append(String part) {
    buffer.append(part).append(';');
    return this;
  }

  public String build() {
    return buffer.toString();
  }
}
