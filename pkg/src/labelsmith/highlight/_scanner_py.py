"""Pure-Python scan loop for the Java tokenizer.

Behavioural contract (shared verbatim with the compiled backend in
``_scanner.pyx``): ``scan`` returns ``(kind_code, start, end)`` character
spans that cover the input exactly, in order, with no gaps or overlaps.
The lexer is total: unterminated strings and comments extend to the end of
the input, anything unmatchable becomes a single-character unknown token.
"""

from __future__ import annotations

from .tokens import JAVA_KEYWORDS

K_KEYWORD = 0
K_IDENTIFIER = 1
K_STRING = 2
K_CHAR = 3
K_NUMBER = 4
K_LINE_COMMENT = 5
K_BLOCK_COMMENT = 6
K_ANNOTATION = 7
K_OPERATOR = 8
K_PUNCTUATION = 9
K_WHITESPACE = 10
K_UNKNOWN = 11

_WS = frozenset(" \t\f\r\n")
_HEX = frozenset("0123456789abcdefABCDEF")
_SUFFIX = frozenset("fFdDlL")

_OP4 = frozenset({">>>="})
_OP3 = frozenset({">>=", "<<=", ">>>"})
_PUNCT3 = frozenset({"..."})
_OP2 = frozenset(
    {"==", ">=", "<=", "!=", "&&", "||", "++", "--", "+=", "-=", "*=",
     "/=", "&=", "|=", "^=", "%=", "<<", ">>", "->"}
)
_PUNCT2 = frozenset({"::"})
_OP1 = frozenset("=><!~?:+-*/&|^%")
_PUNCT1 = frozenset("(){}[];,.@")


def _is_ident_start(c: str) -> bool:
    return c == "_" or c == "$" or c.isalpha()


def _is_ident_part(c: str) -> bool:
    return c == "_" or c == "$" or c.isalnum()


def _scan_quoted(s: str, j: int, quote: str) -> int:
    """End of a quoted literal whose opening quote sits just before ``j``."""
    n = len(s)
    while j < n:
        c = s[j]
        if c == "\\":
            j += 2
        elif c == quote:
            return j + 1
        else:
            j += 1
    return n


def _scan_text_block(s: str, j: int) -> int:
    """End of a text block whose opening triple quote ends just before ``j``."""
    n = len(s)
    while j < n:
        c = s[j]
        if c == "\\":
            j += 2
        elif c == '"' and j + 2 < n and s[j + 1] == '"' and s[j + 2] == '"':
            return j + 3
        else:
            j += 1
    return n


def _scan_number(s: str, i: int) -> int:
    n = len(s)
    j = i
    if (
        s[i] == "0"
        and i + 1 < n
        and (s[i + 1] == "x" or s[i + 1] == "X")
        and i + 2 < n
        and s[i + 2] in _HEX
    ):
        j = i + 2
        while j < n and (s[j] in _HEX or s[j] == "_"):
            j += 1
        if j < n and s[j] == "." and j + 1 < n and s[j + 1] in _HEX:
            j += 1
            while j < n and (s[j] in _HEX or s[j] == "_"):
                j += 1
        if j < n and (s[j] == "p" or s[j] == "P"):
            k = j + 1
            if k < n and (s[k] == "+" or s[k] == "-"):
                k += 1
            if k < n and "0" <= s[k] <= "9":
                j = k + 1
                while j < n and ("0" <= s[j] <= "9" or s[j] == "_"):
                    j += 1
        if j < n and s[j] in _SUFFIX:
            j += 1
        return j
    if (
        s[i] == "0"
        and i + 1 < n
        and (s[i + 1] == "b" or s[i + 1] == "B")
        and i + 2 < n
        and (s[i + 2] == "0" or s[i + 2] == "1")
    ):
        j = i + 2
        while j < n and (s[j] == "0" or s[j] == "1" or s[j] == "_"):
            j += 1
        if j < n and (s[j] == "l" or s[j] == "L"):
            j += 1
        return j
    while j < n and ("0" <= s[j] <= "9" or s[j] == "_"):
        j += 1
    # A dot joins the number only when a digit follows: `1.` lexes as two
    # tokens, `1.5` as one.
    if j < n and s[j] == "." and j + 1 < n and "0" <= s[j + 1] <= "9":
        j += 1
        while j < n and ("0" <= s[j] <= "9" or s[j] == "_"):
            j += 1
    if j < n and (s[j] == "e" or s[j] == "E"):
        k = j + 1
        if k < n and (s[k] == "+" or s[k] == "-"):
            k += 1
        if k < n and "0" <= s[k] <= "9":
            j = k + 1
            while j < n and ("0" <= s[j] <= "9" or s[j] == "_"):
                j += 1
    if j < n and s[j] in _SUFFIX:
        j += 1
    return j


def scan(s: str) -> list[tuple[int, int, int]]:
    """Lex ``s`` into (kind_code, start, end) character spans."""
    n = len(s)
    out: list[tuple[int, int, int]] = []
    i = 0
    while i < n:
        c = s[i]
        if c in _WS:
            j = i + 1
            while j < n and s[j] in _WS:
                j += 1
            out.append((K_WHITESPACE, i, j))
            i = j
        elif c == "/":
            if i + 1 < n and s[i + 1] == "/":
                j = i + 2
                while j < n and s[j] != "\n" and s[j] != "\r":
                    j += 1
                out.append((K_LINE_COMMENT, i, j))
                i = j
            elif i + 1 < n and s[i + 1] == "*":
                j = i + 2
                while j < n:
                    if s[j] == "*" and j + 1 < n and s[j + 1] == "/":
                        j += 2
                        break
                    j += 1
                else:
                    j = n
                out.append((K_BLOCK_COMMENT, i, j))
                i = j
            else:
                j = i + 2 if i + 1 < n and s[i + 1] == "=" else i + 1
                out.append((K_OPERATOR, i, j))
                i = j
        elif c == '"':
            if i + 2 < n and s[i + 1] == '"' and s[i + 2] == '"':
                # Text block opener: """ then optional spaces, then a line
                # terminator. Otherwise the first two quotes are an empty
                # string literal.
                k = i + 3
                while k < n and (s[k] == " " or s[k] == "\t" or s[k] == "\f"):
                    k += 1
                if k < n and (s[k] == "\n" or s[k] == "\r"):
                    j = _scan_text_block(s, i + 3)
                    out.append((K_STRING, i, j))
                    i = j
                    continue
            j = _scan_quoted(s, i + 1, '"')
            out.append((K_STRING, i, j))
            i = j
        elif c == "'":
            j = _scan_quoted(s, i + 1, "'")
            out.append((K_CHAR, i, j))
            i = j
        elif c == "@" and i + 1 < n and _is_ident_start(s[i + 1]):
            j = i + 2
            while j < n and _is_ident_part(s[j]):
                j += 1
            out.append((K_ANNOTATION, i, j))
            i = j
        elif _is_ident_start(c):
            j = i + 1
            while j < n and _is_ident_part(s[j]):
                j += 1
            kind = K_KEYWORD if s[i:j] in JAVA_KEYWORDS else K_IDENTIFIER
            out.append((kind, i, j))
            i = j
        elif "0" <= c <= "9" or (c == "." and i + 1 < n and "0" <= s[i + 1] <= "9"):
            j = _scan_number(s, i)
            out.append((K_NUMBER, i, j))
            i = j
        else:
            if i + 4 <= n and s[i : i + 4] in _OP4:
                out.append((K_OPERATOR, i, i + 4))
                i += 4
                continue
            three = s[i : i + 3]
            if len(three) == 3 and (three in _OP3 or three in _PUNCT3):
                kind = K_OPERATOR if three in _OP3 else K_PUNCTUATION
                out.append((kind, i, i + 3))
                i += 3
                continue
            two = s[i : i + 2]
            if len(two) == 2 and (two in _OP2 or two in _PUNCT2):
                kind = K_OPERATOR if two in _OP2 else K_PUNCTUATION
                out.append((kind, i, i + 2))
                i += 2
                continue
            if c in _OP1:
                out.append((K_OPERATOR, i, i + 1))
            elif c in _PUNCT1:
                out.append((K_PUNCTUATION, i, i + 1))
            else:
                out.append((K_UNKNOWN, i, i + 1))
            i += 1
    return out
