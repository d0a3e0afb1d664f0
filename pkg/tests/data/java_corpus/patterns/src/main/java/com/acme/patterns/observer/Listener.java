package com.acme.patterns.observer;

@FunctionalInterface
public interface Listener<E> {
    void onEvent(E event);

    default Listener<E> andThen(Listener<? super E> after) {
        return event -> {
            onEvent(event);
            after.onEvent(event);
        };
    }
}
