package com.acme.patterns.composite;

import java.util.ArrayList;
import java.util.List;

/** Composite: directories and files share one size/print protocol. */
public abstract class FileSystemNode {

    protected final String name;

    protected FileSystemNode(String name) {
        this.name = name;
    }

    public abstract long sizeBytes();

    public void print(StringBuilder out, int depth) {
        out.append("  ".repeat(depth)).append(name).append('\n');
    }

    public static final class FileLeaf extends FileSystemNode {
        private final long size;

        public FileLeaf(String name, long size) {
            super(name);
            this.size = size;
        }

        @Override
        public long sizeBytes() {
            return size;
        }
    }

    public static final class Directory extends FileSystemNode {
        private final List<FileSystemNode> children = new ArrayList<>();

        public Directory(String name) {
            super(name);
        }

        public Directory add(FileSystemNode child) {
            children.add(child);
            return this;
        }

        @Override
        public long sizeBytes() {
            long total = 0L;
            for (FileSystemNode child : children) {
                total += child.sizeBytes();
            }
            return total;
        }

        @Override
        public void print(StringBuilder out, int depth) {
            super.print(out, depth);
            for (FileSystemNode child : children) {
                child.print(out, depth + 1);
            }
        }
    }
}
