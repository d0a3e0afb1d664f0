package com.acme;

import com.acme.app.model.Money;

/** Exercises Money arithmetic without a test framework dependency. */
public class MoneyTest {

    public static void main(String[] args) {
        testParseAndPrint();
        testAddition();
        testComparision();
        System.out.println("MoneyTest: all assertions passed");
    }

    static void testParseAndPrint() {
        Money m = Money.parse("12.34 EUR");
        expect(m.toString().equals("12.34 EUR"), "round trip: " + m);
    }

    static void testAddition() {
        Money a = Money.ofMinor(1999L, "EUR");
        Money b = Money.ofMinor(1L, "EUR");
        expect(a.plus(b).toString().equals("20.00 EUR"), "carry over");
    }

    static void testComparision() {
        Money small = Money.parse("0.99 EUR");
        Money large = Money.parse("1.01 EUR");
        expect(small.compareTo(large) < 0, "ordering");
        expect(large.compareTo(small) > 0, "ordering reversed");
    }

    private static void expect(boolean condition, String label) {
        if (!condition) {
            throw new AssertionError("failed: " + label);
        }
    }
}
