package shop;

public final class Util {
    public static int clampIndex(int index, int limit) {
        if (index < 0) {
            return 0;
        }
        if (index >= limit) {
            return limit - 1;
        }
        return index;
    }
}
