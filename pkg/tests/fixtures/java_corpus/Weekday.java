package com.example.time;

public enum Weekday {
  MONDAY,
  TUESDAY,
  WEDNESDAY,
  THURSDAY,
  FRIDAY,
  SATURDAY {
    @Override
    public boolean isWeekend() { return true; }
  },
  SUNDAY {
    @Override
    public boolean isWeekend() { return true; }
  };

  public boolean isWeekend() {
    return false;
  }
}
