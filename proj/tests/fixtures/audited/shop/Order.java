package shop;

public class Order implements Audited {
    private String code;
    private Customer customer;
    private OrderLine[] lines;
    private int revision;

    public Order(String code, Customer customer) {
        this.code = code;
        this.customer = customer;
    }

    public String id() {
        return code;
    }

    public void touch() {
        revision = revision + 1;
    }

    public double total() {
        double sum = 0;
        for (int i = 0; i < lines.length; i++) {
            sum = sum + lines[i].subtotal();
        }
        return sum;
    }
}
