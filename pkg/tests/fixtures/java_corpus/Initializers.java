package com.example.state;

import java.util.HashMap;
import java.util.Map;

public class Initializers {
  private static final Map<String, Integer> SIZES = new HashMap<>();
  private int[] offsets = {0, 8, 16, 32};
  private double[][] grid = {{0.0, 1.0}, {1.0, 0.0}};

  static {
    SIZES.put("small", 1);
    SIZES.put("large", 64);
  }

  {
    offsets[0] = -1;
  }

  int plain, twin = 2, third;
}
