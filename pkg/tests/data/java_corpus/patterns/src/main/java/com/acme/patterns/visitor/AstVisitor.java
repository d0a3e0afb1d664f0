package com.acme.patterns.visitor;

/** Visitor over a small expression AST with double dispatch. */
public interface AstVisitor<R> {

    R visitNumber(Num node);

    R visitAdd(Add node);

    R visitMul(Mul node);

    abstract class Node {
        public abstract <R> R accept(AstVisitor<R> visitor);
    }

    final class Num extends Node {
        public final double value;

        public Num(double value) {
            this.value = value;
        }

        @Override
        public <R> R accept(AstVisitor<R> visitor) {
            return visitor.visitNumber(this);
        }
    }

    final class Add extends Node {
        public final Node left, right;

        public Add(Node left, Node right) {
            this.left = left;
            this.right = right;
        }

        @Override
        public <R> R accept(AstVisitor<R> visitor) {
            return visitor.visitAdd(this);
        }
    }

    final class Mul extends Node {
        public final Node left, right;

        public Mul(Node left, Node right) {
            this.left = left;
            this.right = right;
        }

        @Override
        public <R> R accept(AstVisitor<R> visitor) {
            return visitor.visitMul(this);
        }
    }

    class Evaluator implements AstVisitor<Double> {
        @Override
        public Double visitNumber(Num node) {
            return node.value;
        }

        @Override
        public Double visitAdd(Add node) {
            return node.left.accept(this) + node.right.accept(this);
        }

        @Override
        public Double visitMul(Mul node) {
            return node.left.accept(this) * node.right.accept(this);
        }
    }
}
