package com.acme.patterns.proxy;

/** Virtual proxy deferring an expensive load until first render. */
public class ImageProxy implements Renderable {

    private final String path;
    private volatile HeavyImage loaded;

    public ImageProxy(String path) {
        this.path = path;
    }

    @Override
    public String render() {
        HeavyImage image = loaded;
        if (image == null) {
            synchronized (this) {
                if (loaded == null) {
                    loaded = new HeavyImage(path);
                }
                image = loaded;
            }
        }
        return image.render();
    }

    public boolean isLoaded() {
        return loaded != null;
    }

    static final class HeavyImage implements Renderable {
        private final String path;

        HeavyImage(String path) {
            this.path = path;
            try {
                Thread.sleep(1L); // simulate decoding cost
            } catch (InterruptedException e) {
                Thread.currentThread().interrupt();
            }
        }

        @Override
        public String render() {
            return "<img src=\"" + path + "\"/>";
        }
    }
}

interface Renderable {
    String render();
}
