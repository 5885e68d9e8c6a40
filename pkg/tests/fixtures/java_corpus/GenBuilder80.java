package com.acme.core;

import java.util.Objects;

public class GenBuilder80 {
  private StringBuilder buffer = new StringBuilder();

  public GenBuilder80 append(String part) {
    buffer.append(part).append(';');
    return this;
  }

  public String build() {
    return buffer.toString();
  }
}
