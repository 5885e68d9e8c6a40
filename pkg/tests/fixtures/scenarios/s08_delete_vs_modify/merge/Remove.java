public class Remove {

  public void keep() {
    System.out.println("keep");
  }

  public void gone(int x) {
    System.out.println(x + 1);
  }
}
