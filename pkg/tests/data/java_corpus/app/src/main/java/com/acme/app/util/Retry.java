package com.acme.app.util;

import java.util.concurrent.Callable;

/** Bounded retry with exponential backoff and jitter. */
public final class Retry {

    @FunctionalInterface
    public interface Sleeper {
        void sleep(long millis) throws InterruptedException;
    }

    private final int maxAttempts;
    private final long baseDelayMillis;
    private final Sleeper sleeper;

    public Retry(int maxAttempts, long baseDelayMillis, Sleeper sleeper) {
        this.maxAttempts = maxAttempts;
        this.baseDelayMillis = baseDelayMillis;
        this.sleeper = sleeper;
    }

    public <T> T call(Callable<T> task) throws Exception {
        Exception last = null;
        for (int attempt = 1; attempt <= maxAttempts; attempt++) {
            try {
                return task.call();
            } catch (InterruptedException e) {
                throw e; // never swallow interruption
            } catch (Exception e) {
                last = e;
                if (attempt < maxAttempts) {
                    long delay = baseDelayMillis << (attempt - 1);
                    long jitter = (long) (Math.random() * baseDelayMillis);
                    sleeper.sleep(delay + jitter);
                }
            }
        }
        throw last;
    }
}
