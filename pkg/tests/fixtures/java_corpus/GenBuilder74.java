package com.acme.core;

import java.util.Objects;

// line comment header
public class GenBuilder74 {
  private StringBuilder buffer = new StringBuilder();

  public GenBuilder74 append(String part) {
    buffer.append(part).append(';');
    return this;
  }

  public String build() {
    return buffer.toString();
  }
}
