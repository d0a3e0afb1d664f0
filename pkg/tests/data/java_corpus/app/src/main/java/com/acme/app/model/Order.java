package com.acme.app.model;

import java.util.ArrayList;
import java.util.List;
import java.util.stream.Collectors;

public class Order {

    public record Line(String sku, int quantity, Money unitPrice) {
        public Money total() {
            return unitPrice.times(quantity);
        }
    }

    public enum Status { DRAFT, PLACED, SHIPPED, CANCELLED }

    private final String orderId;
    private final List<Line> lines = new ArrayList<>();
    private Status status = Status.DRAFT;

    public Order(String orderId) {
        this.orderId = orderId;
    }

    public Order addLine(String sku, int quantity, Money unitPrice) {
        if (status != Status.DRAFT) {
            throw new IllegalStateException("order " + orderId + " is " + status);
        }
        lines.add(new Line(sku, quantity, unitPrice));
        return this;
    }

    public Money total() {
        return lines.stream()
                .map(Line::total)
                .reduce(Money.ZERO_EUR, Money::plus);
    }

    public void place() {
        if (lines.isEmpty()) {
            throw new IllegalStateException("cannot place an empty order");
        }
        status = Status.PLACED;
    }

    public String summary() {
        return lines.stream()
                .map(line -> line.quantity() + "x " + line.sku())
                .collect(Collectors.joining(", ", orderId + " [", "]"));
    }
}
