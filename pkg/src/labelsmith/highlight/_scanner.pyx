# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled scan loop for the Java tokenizer.

Behavioural twin of ``_scanner_py.scan``: same spans, same kind codes, for
every input. The parity test runs both backends over the fuzz corpus and
asserts identical output; keep the two in lockstep when changing either.
"""

from .tokens import JAVA_KEYWORDS

cdef frozenset _KEYWORDS = JAVA_KEYWORDS

cdef frozenset _OP4 = frozenset({">>>="})
cdef frozenset _OP3 = frozenset({">>=", "<<=", ">>>"})
cdef frozenset _PUNCT3 = frozenset({"..."})
cdef frozenset _OP2 = frozenset(
    {"==", ">=", "<=", "!=", "&&", "||", "++", "--", "+=", "-=", "*=",
     "/=", "&=", "|=", "^=", "%=", "<<", ">>", "->"}
)
cdef frozenset _PUNCT2 = frozenset({"::"})

cdef enum:
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


cdef inline bint _is_ws(Py_UCS4 c):
    return c == u' ' or c == u'\t' or c == u'\f' or c == u'\r' or c == u'\n'


cdef inline bint _is_digit(Py_UCS4 c):
    return u'0' <= c <= u'9'


cdef inline bint _is_hex(Py_UCS4 c):
    return (u'0' <= c <= u'9') or (u'a' <= c <= u'f') or (u'A' <= c <= u'F')


cdef inline bint _is_suffix(Py_UCS4 c):
    return c == u'f' or c == u'F' or c == u'd' or c == u'D' or c == u'l' or c == u'L'


cdef inline bint _is_ident_start(Py_UCS4 c):
    return c == u'_' or c == u'$' or c.isalpha()


cdef inline bint _is_ident_part(Py_UCS4 c):
    return c == u'_' or c == u'$' or c.isalnum()


cdef Py_ssize_t _scan_quoted(unicode s, Py_ssize_t j, Py_UCS4 quote):
    cdef Py_ssize_t n = len(s)
    cdef Py_UCS4 c
    while j < n:
        c = s[j]
        if c == u'\\':
            j += 2
        elif c == quote:
            return j + 1
        else:
            j += 1
    return n


cdef Py_ssize_t _scan_text_block(unicode s, Py_ssize_t j):
    cdef Py_ssize_t n = len(s)
    cdef Py_UCS4 c
    while j < n:
        c = s[j]
        if c == u'\\':
            j += 2
        elif c == u'"' and j + 2 < n and s[j + 1] == u'"' and s[j + 2] == u'"':
            return j + 3
        else:
            j += 1
    return n


cdef Py_ssize_t _scan_number(unicode s, Py_ssize_t i):
    cdef Py_ssize_t n = len(s)
    cdef Py_ssize_t j = i
    cdef Py_ssize_t k
    if (
        s[i] == u'0'
        and i + 1 < n
        and (s[i + 1] == u'x' or s[i + 1] == u'X')
        and i + 2 < n
        and _is_hex(s[i + 2])
    ):
        j = i + 2
        while j < n and (_is_hex(s[j]) or s[j] == u'_'):
            j += 1
        if j < n and s[j] == u'.' and j + 1 < n and _is_hex(s[j + 1]):
            j += 1
            while j < n and (_is_hex(s[j]) or s[j] == u'_'):
                j += 1
        if j < n and (s[j] == u'p' or s[j] == u'P'):
            k = j + 1
            if k < n and (s[k] == u'+' or s[k] == u'-'):
                k += 1
            if k < n and _is_digit(s[k]):
                j = k + 1
                while j < n and (_is_digit(s[j]) or s[j] == u'_'):
                    j += 1
        if j < n and _is_suffix(s[j]):
            j += 1
        return j
    if (
        s[i] == u'0'
        and i + 1 < n
        and (s[i + 1] == u'b' or s[i + 1] == u'B')
        and i + 2 < n
        and (s[i + 2] == u'0' or s[i + 2] == u'1')
    ):
        j = i + 2
        while j < n and (s[j] == u'0' or s[j] == u'1' or s[j] == u'_'):
            j += 1
        if j < n and (s[j] == u'l' or s[j] == u'L'):
            j += 1
        return j
    while j < n and (_is_digit(s[j]) or s[j] == u'_'):
        j += 1
    if j < n and s[j] == u'.' and j + 1 < n and _is_digit(s[j + 1]):
        j += 1
        while j < n and (_is_digit(s[j]) or s[j] == u'_'):
            j += 1
    if j < n and (s[j] == u'e' or s[j] == u'E'):
        k = j + 1
        if k < n and (s[k] == u'+' or s[k] == u'-'):
            k += 1
        if k < n and _is_digit(s[k]):
            j = k + 1
            while j < n and (_is_digit(s[j]) or s[j] == u'_'):
                j += 1
    if j < n and _is_suffix(s[j]):
        j += 1
    return j


def scan(unicode s):
    """Lex ``s`` into (kind_code, start, end) character spans."""
    cdef Py_ssize_t n = len(s)
    cdef Py_ssize_t i = 0
    cdef Py_ssize_t j, k
    cdef Py_UCS4 c
    cdef int kind
    out = []
    while i < n:
        c = s[i]
        if _is_ws(c):
            j = i + 1
            while j < n and _is_ws(s[j]):
                j += 1
            out.append((K_WHITESPACE, i, j))
            i = j
        elif c == u'/':
            if i + 1 < n and s[i + 1] == u'/':
                j = i + 2
                while j < n and s[j] != u'\n' and s[j] != u'\r':
                    j += 1
                out.append((K_LINE_COMMENT, i, j))
                i = j
            elif i + 1 < n and s[i + 1] == u'*':
                j = i + 2
                while j < n:
                    if s[j] == u'*' and j + 1 < n and s[j + 1] == u'/':
                        j += 2
                        break
                    j += 1
                else:
                    j = n
                out.append((K_BLOCK_COMMENT, i, j))
                i = j
            else:
                j = i + 2 if i + 1 < n and s[i + 1] == u'=' else i + 1
                out.append((K_OPERATOR, i, j))
                i = j
        elif c == u'"':
            if i + 2 < n and s[i + 1] == u'"' and s[i + 2] == u'"':
                k = i + 3
                while k < n and (s[k] == u' ' or s[k] == u'\t' or s[k] == u'\f'):
                    k += 1
                if k < n and (s[k] == u'\n' or s[k] == u'\r'):
                    j = _scan_text_block(s, i + 3)
                    out.append((K_STRING, i, j))
                    i = j
                    continue
            j = _scan_quoted(s, i + 1, u'"')
            out.append((K_STRING, i, j))
            i = j
        elif c == u"'":
            j = _scan_quoted(s, i + 1, u"'")
            out.append((K_CHAR, i, j))
            i = j
        elif c == u'@' and i + 1 < n and _is_ident_start(s[i + 1]):
            j = i + 2
            while j < n and _is_ident_part(s[j]):
                j += 1
            out.append((K_ANNOTATION, i, j))
            i = j
        elif _is_ident_start(c):
            j = i + 1
            while j < n and _is_ident_part(s[j]):
                j += 1
            kind = K_KEYWORD if s[i:j] in _KEYWORDS else K_IDENTIFIER
            out.append((kind, i, j))
            i = j
        elif _is_digit(c) or (c == u'.' and i + 1 < n and _is_digit(s[i + 1])):
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
            if c in u"=><!~?:+-*/&|^%":
                out.append((K_OPERATOR, i, i + 1))
            elif c in u"(){}[];,.@":
                out.append((K_PUNCTUATION, i, i + 1))
            else:
                out.append((K_UNKNOWN, i, i + 1))
            i += 1
    return out
