package pkg;

public class Good03 {
    private int value03;

    public int value() {
        return value03;
    }
}
