package com.acme.io;

import java.util.Objects;

public class GenBuilder96 {
  private StringBuilder buffer = new StringBuilder();

  public GenBuilder96 append(String part) {
    buffer.append(part).append(';');
    return this;
  }

  public String build() {
    return buffer.toString();
  }
}
