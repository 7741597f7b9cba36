package shop;

// Core identity surface shared by catalog and account types.
public interface Entity {
    String id();
}
