package com.acme.patterns.prototype;

import java.util.ArrayList;
import java.util.List;

/** Prototype: documents are produced by cloning a configured template. */
public class DocumentPrototype implements Cloneable {

    private String title = "untitled";
    private final List<String> sections = new ArrayList<>();

    public DocumentPrototype title(String title) {
        this.title = title;
        return this;
    }

    public DocumentPrototype addSection(String heading) {
        sections.add(heading);
        return this;
    }

    @Override
    public DocumentPrototype clone() {
        try {
            DocumentPrototype copy = (DocumentPrototype) super.clone();
            // Deep copy: list contents are shared strings, safe to re-wrap.
            return copy.replaceSections(new ArrayList<>(sections));
        } catch (CloneNotSupportedException e) {
            throw new AssertionError(e); // Cloneable is implemented
        }
    }

    private DocumentPrototype replaceSections(List<String> fresh) {
        sections.clear();
        sections.addAll(fresh);
        return this;
    }

    public String outline() {
        StringBuilder sb = new StringBuilder("# " + title + '\n');
        for (int i = 0; i < sections.size(); i++) {
            sb.append(i + 1).append(". ").append(sections.get(i)).append('\n');
        }
        return sb.toString();
    }
}
