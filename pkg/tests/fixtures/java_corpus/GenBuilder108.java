package org.sample.util;

import java.util.Objects;

public class GenBuilder108 {
  private StringBuilder buffer = new StringBuilder();

  public GenBuilder108 append(String part) {
    buffer.append(part).append(';');
    return this;
  }

  public String build() {
    return buffer.toString();
  }
}
