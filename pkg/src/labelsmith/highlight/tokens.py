"""Token model for the Java syntax highlighter."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class TokenKind(str, Enum):
    KEYWORD = "keyword"
    IDENTIFIER = "identifier"
    STRING_LITERAL = "string_literal"
    CHAR_LITERAL = "char_literal"
    NUMBER_LITERAL = "number_literal"
    LINE_COMMENT = "line_comment"
    BLOCK_COMMENT = "block_comment"
    ANNOTATION = "annotation"
    OPERATOR = "operator"
    PUNCTUATION = "punctuation"
    WHITESPACE = "whitespace"
    UNKNOWN = "unknown"


#: Scanner backends emit small integer codes; index order matches TokenKind
#: definition order.
KIND_BY_CODE: tuple[TokenKind, ...] = tuple(TokenKind)


@dataclass(frozen=True)
class Token:
    """One lexical token.

    ``start`` and ``length`` are offsets into the UTF-8 byte encoding of the
    source; ``line`` and ``column`` are 1-based, with the column counted in
    characters from the start of the line.
    """

    kind: TokenKind
    start: int
    length: int
    line: int
    column: int


#: The 51 reserved words of the Java lexical grammar (`var` is contextual
#: and lexes as an identifier; `true`/`false`/`null` are literals, not
#: reserved words).
JAVA_KEYWORDS = frozenset(
    {
        "abstract", "assert", "boolean", "break", "byte", "case", "catch",
        "char", "class", "const", "continue", "default", "do", "double",
        "else", "enum", "extends", "final", "finally", "float", "for",
        "goto", "if", "implements", "import", "instanceof", "int",
        "interface", "long", "native", "new", "package", "private",
        "protected", "public", "return", "short", "static", "strictfp",
        "super", "switch", "synchronized", "this", "throw", "throws",
        "transient", "try", "void", "volatile", "while", "_",
    }
)
