package com.acme.app;

/** A zoo of numeric literal spellings used by the formatter tests. */
public final class Numbers {

    private Numbers() {}

    public static final int DECIMAL = 1_234_567;
    public static final int HEX = 0xDEAD_BEEF;
    public static final int OCTAL = 0777;
    public static final int BINARY = 0b1011_0110;
    public static final long BIG = 9_223_372_036_854_775_807L;
    public static final long HEX_LONG = 0xCAFE_BABEL;

    public static final float FRACTION = 0.25f;
    public static final float EXP_FLOAT = 1.5e-4F;
    public static final double PLAIN = 3.141592653589793;
    public static final double EXP = 6.022e23;
    public static final double NEG_EXP = 1E-9;
    public static final double LEADING_DOT = .5d;
    public static final double TRAILING_SUFFIX = 42.0D;
    public static final double HEX_FLOAT = 0x1.8p3;

    public static double sum() {
        double total = 0;
        total += DECIMAL + HEX + OCTAL + BINARY;
        total += BIG % 97L;
        total += FRACTION + EXP_FLOAT + PLAIN + EXP + NEG_EXP;
        total += LEADING_DOT + TRAILING_SUFFIX + HEX_FLOAT;
        return total;
    }

    public static int shifty(int x) {
        x <<= 2;
        x >>= 1;
        x >>>= 3;
        x |= 0x10;
        x &= ~0x01;
        x ^= 0b11;
        return x;
    }
}
