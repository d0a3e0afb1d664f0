"""Java lexer for syntax highlighting.

Tokenization is lossless: the token spans cover the input exactly, so the
viewer can rebuild the file from the stream. The scan loop has a compiled
backend (Cython) used when the built extension imports, and a pure-Python
twin with identical behaviour; set ``LABELSMITH_PURE_PYTHON=1`` to force
the fallback.
"""

from __future__ import annotations

import os
from bisect import bisect_right

from .tokens import JAVA_KEYWORDS, KIND_BY_CODE, Token, TokenKind

if os.environ.get("LABELSMITH_PURE_PYTHON"):
    from ._scanner_py import scan as _scan

    BACKEND = "python"
else:
    try:
        from ._scanner import scan as _scan  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from ._scanner_py import scan as _scan

        BACKEND = "python"

__all__ = [
    "BACKEND",
    "JAVA_KEYWORDS",
    "Token",
    "TokenKind",
    "scan_spans",
    "token_json",
    "tokenize",
]


def _line_starts(source: str) -> list[int]:
    """Character offsets at which each line starts (CR, LF and CRLF)."""
    starts = [0]
    n = len(source)
    i = 0
    while i < n:
        cr = source.find("\r", i)
        lf = source.find("\n", i)
        if cr == -1 and lf == -1:
            break
        if cr != -1 and (lf == -1 or cr < lf):
            i = cr + 2 if cr + 1 < n and source[cr + 1] == "\n" else cr + 1
        else:
            i = lf + 1
        starts.append(i)
    return starts


def scan_spans(source: str) -> list[tuple[TokenKind, int, int]]:
    """Lex into (kind, start_char, end_char) spans covering the input."""
    return [(KIND_BY_CODE[code], a, b) for code, a, b in _scan(source)]


def tokenize(source: str) -> list[Token]:
    """Lex Java source text into highlight tokens.

    Total over arbitrary text; token byte spans concatenate back to the
    UTF-8 encoding of the input.
    """
    spans = _scan(source)
    starts = _line_starts(source)
    ascii_only = source.isascii()
    tokens: list[Token] = []
    byte_pos = 0
    for code, a, b in spans:
        if ascii_only:
            byte_start, byte_len = a, b - a
        else:
            byte_start = byte_pos
            byte_len = len(source[a:b].encode("utf-8"))
        byte_pos = byte_start + byte_len
        line = bisect_right(starts, a)
        column = a - starts[line - 1] + 1
        tokens.append(
            Token(
                kind=KIND_BY_CODE[code],
                start=byte_start,
                length=byte_len,
                line=line,
                column=column,
            )
        )
    return tokens


def token_json(tokens: list[Token]) -> list[dict]:
    """Wire shape used by the file-view API."""
    return [
        {
            "kind": t.kind.value,
            "start": t.start,
            "length": t.length,
            "line": t.line,
            "column": t.column,
        }
        for t in tokens
    ]
