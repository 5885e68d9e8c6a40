import java.util.ArrayList;
import java.util.List;

public class Util {

  private static final String EMPTY_LIST_MESSAGE = "The list is empty";

  public static <T> void addElementToList(List<T> list, T element) {
    list.add(element);
  }

  public static <T> String toString(List<T> list) {
    if (list == null || list.isEmpty()) { return EMPTY_LIST_MESSAGE; }
    StringBuilder builder = new StringBuilder("List: ");
    for (T element : list) {
      builder.append(element.toString());
      builder.append(" ");
    }
    return builder.toString();
  }
}
