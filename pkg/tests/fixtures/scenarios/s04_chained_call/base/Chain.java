public class Chain {

  public void run() {
    a().b(c).d();
  }
}
