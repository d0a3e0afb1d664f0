package com.acme.app.legacy;

import java.io.Serializable;
import java.util.Enumeration;
import java.util.Hashtable;
import java.util.Vector;

/**
 * Deliberately old-fashioned code kept for compatibility tests: raw
 * types, octal literals, strictfp arithmetic and transient fields.
 */
public strictfp class OldStyle implements Serializable {

    private static final long serialVersionUID = 0x0123_4567_89AB_CDEFL;

    public static final int FILE_MODE = 0755;
    public static final int UMASK = 0022;

    private transient Hashtable cache = new Hashtable();
    private Vector entries = new Vector();

    public synchronized void put(Object key, Object value) {
        if (cache == null) {
            cache = new Hashtable();
        }
        cache.put(key, value);
        entries.addElement(key);
    }

    public synchronized Object get(Object key) {
        return cache == null ? null : cache.get(key);
    }

    public synchronized int walk() {
        int visited = 0;
        for (Enumeration e = entries.elements(); e.hasMoreElements(); ) {
            Object key = e.nextElement();
            if (get(key) != null) {
                visited++;
            }
        }
        return visited;
    }

    public strictfp double scaled(double base) {
        double x = base * 1.0e308;
        return x / 1.0e308;
    }
}
