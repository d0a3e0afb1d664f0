package com.acme.patterns.builder;

import java.util.EnumSet;
import java.util.Set;

/** Telescoping-constructor escape hatch: static nested builder. */
public class Pizza {

    public enum Topping { HAM, MUSHROOM, ONION, PEPPER, SAUSAGE }

    private final int sizeCm;
    private final Set<Topping> toppings;
    private final boolean extraCheese;

    private Pizza(Builder builder) {
        this.sizeCm = builder.sizeCm;
        this.toppings = EnumSet.copyOf(builder.toppings);
        this.extraCheese = builder.extraCheese;
    }

    public static Builder ofSize(int sizeCm) {
        return new Builder(sizeCm);
    }

    public static class Builder {
        private final int sizeCm;
        private final Set<Topping> toppings = EnumSet.noneOf(Topping.class);
        private boolean extraCheese = false;

        Builder(int sizeCm) {
            this.sizeCm = sizeCm;
        }

        public Builder with(Topping topping) {
            toppings.add(topping);
            return this;
        }

        public Builder extraCheese() {
            this.extraCheese = true;
            return this;
        }

        public Pizza bake() {
            return new Pizza(this);
        }
    }

    @Override
    public String toString() {
        return sizeCm + "cm pizza, toppings=" + toppings
                + (extraCheese ? " + extra cheese" : "");
    }
}
