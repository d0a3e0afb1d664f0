package com.acme.patterns.adapter;

import java.nio.charset.StandardCharsets;

/** Adapts a byte-oriented legacy printer to the modern text interface. */
public class LegacyPrinterAdapter implements TextSink {

    /** Third-party class we cannot change. */
    public static class LegacyPrinter {
        private final StringBuilder spool = new StringBuilder();

        void feed(byte[] raw, int off, int len) {
            spool.append(new String(raw, off, len, StandardCharsets.ISO_8859_1));
        }

        String drain() {
            String out = spool.toString();
            spool.setLength(0);
            return out;
        }
    }

    private final LegacyPrinter delegate;

    public LegacyPrinterAdapter(LegacyPrinter delegate) {
        this.delegate = delegate;
    }

    @Override
    public void write(String text) {
        byte[] raw = text.getBytes(StandardCharsets.ISO_8859_1);
        delegate.feed(raw, 0, raw.length);
    }

    @Override
    public String flush() {
        return delegate.drain();
    }
}

interface TextSink {
    void write(String text);

    String flush();
}
