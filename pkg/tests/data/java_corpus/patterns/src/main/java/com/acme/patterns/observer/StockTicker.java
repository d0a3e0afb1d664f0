package com.acme.patterns.observer;

import java.util.HashMap;
import java.util.Map;

/** Concrete subject pushing price updates to observers. */
public class StockTicker {

    public record Quote(String symbol, double price, long volume) {}

    private final EventBus<Quote> bus = new EventBus<>();
    private final Map<String, Double> lastPrice = new HashMap<>();

    public AutoCloseable watch(String symbol, Listener<Quote> listener) {
        return bus.subscribe(quote -> {
            if (quote.symbol().equals(symbol)) {
                listener.onEvent(quote);
            }
        });
    }

    public void tick(String symbol, double price, long volume) {
        Double previous = lastPrice.put(symbol, price);
        if (previous == null || Math.abs(previous - price) > 1e-9) {
            bus.publish(new Quote(symbol, price, volume));
        }
    }
}
