public class Single {

  public String name() {
    return "old";
  }
}
