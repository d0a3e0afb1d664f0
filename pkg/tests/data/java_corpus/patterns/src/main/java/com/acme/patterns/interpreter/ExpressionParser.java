package com.acme.patterns.interpreter;

/**
 * Interpreter for a tiny arithmetic grammar:
 *
 * <pre>
 *   expr   := term (('+' | '-') term)*
 *   term   := factor (('*' | '/') factor)*
 *   factor := NUMBER | '(' expr ')'
 * </pre>
 */
public class ExpressionParser {

    private final String source;
    private int pos = 0;

    public ExpressionParser(String source) {
        this.source = source;
    }

    public double parse() {
        double value = expr();
        skipWhitespace();
        if (pos != source.length()) {
            throw new IllegalArgumentException("trailing input at " + pos);
        }
        return value;
    }

    private double expr() {
        double value = term();
        while (true) {
            skipWhitespace();
            if (eat('+')) {
                value += term();
            } else if (eat('-')) {
                value -= term();
            } else {
                return value;
            }
        }
    }

    private double term() {
        double value = factor();
        while (true) {
            skipWhitespace();
            if (eat('*')) {
                value *= factor();
            } else if (eat('/')) {
                value /= factor();
            } else {
                return value;
            }
        }
    }

    private double factor() {
        skipWhitespace();
        if (eat('(')) {
            double inner = expr();
            skipWhitespace();
            if (!eat(')')) {
                throw new IllegalArgumentException("expected ')' at " + pos);
            }
            return inner;
        }
        int start = pos;
        while (pos < source.length()
                && (Character.isDigit(source.charAt(pos)) || source.charAt(pos) == '.')) {
            pos++;
        }
        if (start == pos) {
            throw new IllegalArgumentException("expected number at " + pos);
        }
        return Double.parseDouble(source.substring(start, pos));
    }

    private boolean eat(char expected) {
        if (pos < source.length() && source.charAt(pos) == expected) {
            pos++;
            return true;
        }
        return false;
    }

    private void skipWhitespace() {
        while (pos < source.length() && Character.isWhitespace(source.charAt(pos))) {
            pos++;
        }
    }
}
