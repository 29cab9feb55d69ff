import re
from typing import Iterator, NamedTuple

from POIMsparql.errors import custom_errors as ce

_CHARS = r"A-Za-z\u00c0-\uffff"
_NAME = rf"[{_CHARS}0-9_\u00b7](?:[{_CHARS}0-9_\-.\u00b7]*[{_CHARS}0-9_\-\u00b7])?"
_PREFIX = rf"(?:[{_CHARS}](?:[{_CHARS}0-9_\-.]*[{_CHARS}0-9_\-])?)?"

TOKEN_SPEC = [
    ("COMMENT", r"#[^\n]*"),
    ("NEWLINE", r"\n"),
    ("SPACE", r"[ \t\r]+"),
    ("IRIREF", r"<[^<>\"{}|^`\\\x00-\x20]*>"),
    ("STRING", r'"(?:[^"\\\n\r]|\\.)*"'),
    ("DIRECTIVE", r"@prefix\b"),
    ("LANGTAG", r"@[A-Za-z]+(?:-[A-Za-z0-9]+)*"),
    ("DATATYPE", r"\^\^"),
    ("BLANK", rf"_:{_NAME}"),
    ("VAR", rf"[?$]{_NAME}"),
    ("PNAME", rf"{_PREFIX}:(?:{_NAME})?"),
    ("KEYWORD", r"(?i:PREFIX|CONSTRUCT|SELECT|WHERE)\b"),
    ("PUNCT", r"[.;,{}]"),
]

_MASTER = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in TOKEN_SPEC))
_SKIPPED = {"COMMENT", "NEWLINE", "SPACE"}

_UNESCAPES = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int


def unescape(body, line, column):
    """
    Decode the escapes of a string literal body (without its quotes).
    """
    out = []
    i = 0
    while i < len(body):
        c = body[i]
        if c != "\\":
            out.append(c)
            i += 1
            continue
        nxt = body[i + 1] if i + 1 < len(body) else ""
        if nxt in _UNESCAPES:
            out.append(_UNESCAPES[nxt])
            i += 2
        elif nxt in ("u", "U"):
            width = 4 if nxt == "u" else 8
            digits = body[i + 2:i + 2 + width]
            if len(digits) != width or not all(d in "0123456789abcdefABCDEF" for d in digits):
                raise ce.ParseError("Malformed unicode escape", line, column)
            try:
                out.append(chr(int(digits, 16)))
            except ValueError:
                raise ce.ParseError("Unicode escape out of range", line, column)
            i += 2 + width
        else:
            raise ce.ParseError(f"Unknown escape \\{nxt}", line, column)
    return "".join(out)


def tokenize(text: str) -> Iterator[Token]:
    """
    Split a document into tokens, with 1-based line and column positions.
    """
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        found = _MASTER.match(text, pos)
        column = pos - line_start + 1
        if found is None:
            raise ce.ParseError(f"Unexpected character {text[pos]!r}", line, column)
        kind = found.lastgroup
        if kind == "NEWLINE":
            line += 1
            line_start = found.end()
        elif kind not in _SKIPPED:
            yield Token(kind, found.group(), line, column)
        pos = found.end()
    yield Token("EOF", "", line, pos - line_start + 1)
