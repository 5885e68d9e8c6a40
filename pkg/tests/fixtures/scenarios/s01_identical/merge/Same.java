public class Same {

  public int answer() {
    return 42;
  }
}
