package com.example.raw;

class NoFinalNewline {
  int x;
}