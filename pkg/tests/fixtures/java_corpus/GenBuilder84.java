package com.acme.core;

import java.util.Objects;

public class GenBuilder84 {
  private StringBuilder buffer = new StringBuilder();

  public GenBuilder84 append(String part) {
    buffer.append(part).append(';');
    return this;
  }

  public String build() {
    return buffer.toString();
  }
}
