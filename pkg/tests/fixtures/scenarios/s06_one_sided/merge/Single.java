public class Single {

  public String name() {
    return "new";
  }
}
