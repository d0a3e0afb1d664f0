package com.acme.app.io;

import java.util.ArrayList;
import java.util.List;

/** Hand-rolled scanner for a JSON subset (strings, numbers, symbols). */
public class JsonLexer {

    public enum Kind { LBRACE, RBRACE, LBRACKET, RBRACKET, COLON, COMMA,
                       STRING, NUMBER, TRUE, FALSE, NULL }

    public record Tok(Kind kind, String text, int offset) {}

    public List<Tok> lex(String src) {
        List<Tok> tokens = new ArrayList<>();
        int i = 0;
        while (i < src.length()) {
            char c = src.charAt(i);
            switch (c) {
                case ' ', '\t', '\r', '\n' -> i++;
                case '{' -> tokens.add(new Tok(Kind.LBRACE, "{", i++));
                case '}' -> tokens.add(new Tok(Kind.RBRACE, "}", i++));
                case '[' -> tokens.add(new Tok(Kind.LBRACKET, "[", i++));
                case ']' -> tokens.add(new Tok(Kind.RBRACKET, "]", i++));
                case ':' -> tokens.add(new Tok(Kind.COLON, ":", i++));
                case ',' -> tokens.add(new Tok(Kind.COMMA, ",", i++));
                case '"' -> i = lexString(src, i, tokens);
                default -> i = lexOther(src, i, tokens);
            }
        }
        return tokens;
    }

    private int lexString(String src, int start, List<Tok> tokens) {
        int i = start + 1;
        StringBuilder sb = new StringBuilder();
        while (i < src.length() && src.charAt(i) != '"') {
            char c = src.charAt(i);
            if (c == '\\' && i + 1 < src.length()) {
                char next = src.charAt(++i);
                sb.append(switch (next) {
                    case 'n' -> '\n';
                    case 't' -> '\t';
                    case 'r' -> '\r';
                    case '"' -> '"';
                    case '\\' -> '\\';
                    default -> next;
                });
            } else {
                sb.append(c);
            }
            i++;
        }
        tokens.add(new Tok(Kind.STRING, sb.toString(), start));
        return i + 1;
    }

    private int lexOther(String src, int start, List<Tok> tokens) {
        if (src.startsWith("true", start)) {
            tokens.add(new Tok(Kind.TRUE, "true", start));
            return start + 4;
        }
        if (src.startsWith("false", start)) {
            tokens.add(new Tok(Kind.FALSE, "false", start));
            return start + 5;
        }
        if (src.startsWith("null", start)) {
            tokens.add(new Tok(Kind.NULL, "null", start));
            return start + 4;
        }
        int i = start;
        while (i < src.length() && "+-.eE0123456789".indexOf(src.charAt(i)) >= 0) {
            i++;
        }
        if (i == start) {
            throw new IllegalArgumentException("unexpected char at " + start);
        }
        tokens.add(new Tok(Kind.NUMBER, src.substring(start, i), start));
        return i;
    }
}
