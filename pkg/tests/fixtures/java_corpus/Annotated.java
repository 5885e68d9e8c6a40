package com.example.meta;

import java.util.List;

@SuppressWarnings({"unchecked", "rawtypes"})
@Deprecated
public class Annotated {
  @SafeVarargs
  @SuppressWarnings("varargs")
  public final <T> List<T> listOf(@Deprecated T... items) {
    return List.of(items);
  }

  @Override
  public String toString() {
    return "Annotated()";
  }
}
