public class Chain {

  public void run() {
    a().g(h(e), c).d();
  }
}
