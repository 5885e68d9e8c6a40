import java.util.ArrayList;
import java.util.List;

public class Util {

  private static final String EMPTY_LIST_MESSAGE = "The list is empty";

  public static <T> void addElementToList(List<T> list, T element) {
    list.add(element);
  }

  public static <T> String toString(List<T> list) {
<<<<<<< left
    if (list == null || list.isEmpty()) { return "The list is empty"; }
=======
    if (list.isEmpty()) { return EMPTY_LIST_MESSAGE; }
>>>>>>> right
    StringBuilder builder = new StringBuilder("List: ");
    for (T element : list) {
      builder.append(element.toString());
      builder.append(" ");
    }
    return builder.toString();
  }
}
