package com.acme.patterns.memento;

import java.util.ArrayDeque;
import java.util.Deque;

/** Memento: snapshots of editor state restorable in LIFO order. */
public class EditorHistory {

    public static final class Snapshot {
        private final String text;
        private final int caret;

        private Snapshot(String text, int caret) {
            this.text = text;
            this.caret = caret;
        }
    }

    public static class Editor {
        private String text = "";
        private int caret = 0;

        public void type(String insert) {
            text = text.substring(0, caret) + insert + text.substring(caret);
            caret += insert.length();
        }

        public Snapshot save() {
            return new Snapshot(text, caret);
        }

        public void restore(Snapshot snapshot) {
            this.text = snapshot.text;
            this.caret = snapshot.caret;
        }

        public String text() {
            return text;
        }
    }

    private final Deque<Snapshot> undoStack = new ArrayDeque<>();

    public void checkpoint(Editor editor) {
        undoStack.push(editor.save());
    }

    public boolean undo(Editor editor) {
        Snapshot snapshot = undoStack.poll();
        if (snapshot == null) {
            return false;
        }
        editor.restore(snapshot);
        return true;
    }
}
