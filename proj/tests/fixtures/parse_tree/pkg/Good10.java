package pkg;

public class Good10 {
    private int value10;

    public int value() {
        return value10;
    }
}
