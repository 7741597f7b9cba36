package pkg;

public class Good08 {
    private int value08;

    public int value() {
        return value08;
    }
}
