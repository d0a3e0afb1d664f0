package com.acme.patterns.singleton;

/** Initialization-on-demand holder idiom; thread safe without locks. */
public class LazyHolder {

    private LazyHolder() {}

    private static class Holder {
        static final LazyHolder INSTANCE = new LazyHolder();
    }

    public static LazyHolder instance() {
        return Holder.INSTANCE;
    }

    @Override
    public String toString() {
        return String.format("LazyHolder@%08x", System.identityHashCode(this));
    }
}
