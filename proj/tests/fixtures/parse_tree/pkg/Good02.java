package pkg;

public class Good02 {
    private int value02;

    public int value() {
        return value02;
    }
}
