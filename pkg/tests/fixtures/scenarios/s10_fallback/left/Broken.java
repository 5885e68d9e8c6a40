public class Broken {
  void m() {
    int x = 2;
}
