package com.acme.app.model;

import java.time.Instant;
import java.util.Objects;
import java.util.Optional;

public class Customer {

    private final String id;
    private final String email;
    private String displayName;
    private Instant lastSeen;

    public Customer(String id, String email, String displayName) {
        this.id = Objects.requireNonNull(id);
        this.email = email.toLowerCase();
        this.displayName = displayName;
    }

    public String id() {
        return id;
    }

    public String email() {
        return email;
    }

    public Optional<Instant> lastSeen() {
        return Optional.ofNullable(lastSeen);
    }

    public void touch() {
        lastSeen = Instant.now();
    }

    public void rename(String newName) {
        if (newName == null || newName.isBlank()) {
            throw new IllegalArgumentException("display name must not be blank");
        }
        this.displayName = newName;
    }

    @Override
    public boolean equals(Object other) {
        if (this == other) {
            return true;
        }
        if (!(other instanceof Customer)) {
            return false;
        }
        return id.equals(((Customer) other).id);
    }

    @Override
    public int hashCode() {
        return id.hashCode();
    }

    @Override
    public String toString() {
        return displayName + " <" + email + ">";
    }
}
