public class Gate {

  public boolean open(int count) {
    if (count >= 15) {
      return true;
    }
    return false;
  }
}
