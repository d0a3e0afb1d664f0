package com.acme.app.concurrent;

import java.util.ArrayList;
import java.util.List;
import java.util.concurrent.BlockingQueue;
import java.util.concurrent.LinkedBlockingQueue;
import java.util.concurrent.TimeUnit;
import java.util.concurrent.atomic.AtomicLong;

/** Hand-rolled fixed worker pool draining a blocking queue. */
public class WorkerPool implements AutoCloseable {

    private final BlockingQueue<Runnable> queue = new LinkedBlockingQueue<>(1024);
    private final List<Thread> workers = new ArrayList<>();
    private final AtomicLong completed = new AtomicLong();
    private volatile boolean running = true;

    public WorkerPool(int size) {
        for (int i = 0; i < size; i++) {
            Thread worker = new Thread(this::drain, "worker-" + i);
            worker.setDaemon(true);
            worker.start();
            workers.add(worker);
        }
    }

    private void drain() {
        while (running || !queue.isEmpty()) {
            try {
                Runnable task = queue.poll(50L, TimeUnit.MILLISECONDS);
                if (task != null) {
                    task.run();
                    completed.incrementAndGet();
                }
            } catch (InterruptedException e) {
                Thread.currentThread().interrupt();
                return;
            } catch (RuntimeException e) {
                // task failure must not kill the worker
            }
        }
    }

    public boolean submit(Runnable task) {
        return running && queue.offer(task);
    }

    public long completedCount() {
        return completed.get();
    }

    @Override
    public void close() throws InterruptedException {
        running = false;
        for (Thread worker : workers) {
            worker.join(1_000L);
        }
    }
}
