package pkg;

public class Good01 {
    private int value01;

    public int value() {
        return value01;
    }
}
