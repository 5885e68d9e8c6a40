import java.util.ArrayList;
import java.util.List;

public class Util {

  public static <T> List<T> copyList(List<T> list) {
    List<T> copy = new ArrayList<T>();
    for (T element : list) {
      copy.add(element);
    }
    return copy;
  }

  public static <T> List<T> createListFromArray(T[] array) {
    List<T> list = new ArrayList<T>();
    for (T element : array) {
      list.add(element);
    }
    return list;
  }

  public static <T> void addElementToList(List<T> list, T element) {
    list.add(element);
  }

  public static <T> String toString(List<T> list) {
    if (list.isEmpty()) { return "The list is empty"; }
    StringBuilder builder = new StringBuilder("List: ");
    for (T element : list) {
      builder.append(element.toString());
      builder.append(" ");
    }
    return builder.toString();
  }
}
