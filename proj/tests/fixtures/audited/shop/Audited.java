package shop;

public interface Audited extends Entity {
    void touch();
}
