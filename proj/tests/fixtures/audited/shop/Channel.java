package shop;

public enum Channel {
    WEB, STORE, PARTNER;

    public boolean online() {
        return this == WEB;
    }
}
