public class NewFile {

  public void hello() {
  }
}
