package com.example.generics;

import java.util.Collection;
import java.util.Comparator;
import java.util.List;
import java.util.Map;

public abstract class Generics<K extends Comparable<K>, V> {
  protected Map<K, List<V>> index;

  public abstract <T extends Collection<? super V>> T drain(T target);

  public static <E> void sort(List<E> items, Comparator<? super E> order) {
    items.sort(order);
  }

  public Map.Entry<K, V> first(Map<K, ? extends V> source) {
    return null;
  }
}
