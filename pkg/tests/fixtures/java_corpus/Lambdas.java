package com.example.fn;

import java.util.function.BiFunction;
import java.util.function.Supplier;

public class Lambdas {
  private Supplier<String> greeting = () -> "hello; {world}";
  private BiFunction<Integer, Integer, Integer> add = (a, b) -> a + b;

  public Runnable chained() {
    return () -> {
      int total = add.apply(1, 2);
      System.out.println(greeting.get() + total);
    };
  }
}
