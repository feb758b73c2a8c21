"""Text notation for continued fractions.

Grammar (whitespace-insensitive):

    finite     := "[" a0 ((";" | ",") term ("," term)*)? "]"
    periodic   := "[" (a0 (";" | ",")) (term ",")* "(" term ("," term)* ")" "]"

The leading coefficient may be negative; every later coefficient must be
a positive integer. The repeating block goes in parentheses and must be
last: "[1;(2)]", "[(1)]", "[3;1,(1,6)]". Output always uses ";" after
a0 and "," elsewhere.
"""

from __future__ import annotations

from .cf import FiniteCF
from .errors import CFSyntaxError, InvariantError
from .surd import PeriodicCF


def _tokenize(text: str) -> list[tuple[str, int, object]]:
    tokens: list[tuple[str, int, object]] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "[];,()":
            tokens.append((ch, i, ch))
            i += 1
            continue
        if ch == "-" or ch in "0123456789":
            start = i
            i += 1
            while i < len(text) and text[i] in "0123456789":
                i += 1
            digits = text[start:i]
            if digits == "-":
                raise CFSyntaxError("lone '-' is not a number", start)
            tokens.append(("int", start, int(digits)))
            continue
        raise CFSyntaxError(f"unexpected character {ch!r}", i)
    return tokens


class _TokenCursor:
    def __init__(self, tokens: list[tuple[str, int, object]], length: int):
        self.tokens = tokens
        self.pos = 0
        self.length = length

    def peek(self) -> tuple[str, int, object] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> tuple[str, int, object]:
        tok = self.peek()
        if tok is None:
            raise CFSyntaxError("unexpected end of input", self.length)
        self.pos += 1
        return tok

    def expect(self, kind: str) -> tuple[str, int, object]:
        tok = self.next()
        if tok[0] != kind:
            raise CFSyntaxError(f"expected {kind!r}, found {tok[0]!r}", tok[1])
        return tok


def parse_cf(text: str) -> FiniteCF | PeriodicCF:
    """Parse bracket notation into a finite or periodic continued fraction."""
    cursor = _TokenCursor(_tokenize(text), len(text))
    cursor.expect("[")
    pre: list[int] = []
    period: list[int] = []
    tok = cursor.next()
    while True:
        if tok[0] == "int":
            if period:
                raise CFSyntaxError("coefficients cannot follow the period", tok[1])
            pre.append(tok[2])  # type: ignore[arg-type]
        elif tok[0] == "(":
            if period:
                raise CFSyntaxError("only one period group is allowed", tok[1])
            tok = cursor.next()
            while True:
                if tok[0] != "int":
                    raise CFSyntaxError("period must contain integers", tok[1])
                period.append(tok[2])  # type: ignore[arg-type]
                tok = cursor.next()
                if tok[0] == ")":
                    break
                if tok[0] != ",":
                    raise CFSyntaxError("expected ',' or ')' in period", tok[1])
                tok = cursor.next()
            if not period:
                raise InvariantError("period must be nonempty")
        else:
            raise CFSyntaxError(f"unexpected {tok[0]!r}", tok[1])
        tok = cursor.next()
        if tok[0] == "]":
            break
        if tok[0] == ";":
            if len(pre) != 1 or period:
                raise CFSyntaxError("';' is only valid right after a0", tok[1])
        elif tok[0] != ",":
            raise CFSyntaxError(f"expected ',', ';' or ']', found {tok[0]!r}", tok[1])
        tok = cursor.next()
    if cursor.peek() is not None:
        raise CFSyntaxError("trailing input after ']'", cursor.peek()[1])
    if not pre and not period:
        raise CFSyntaxError("empty continued fraction", 0)
    for i, a in enumerate(pre[1:], start=1):
        if a < 1:
            raise InvariantError(f"coefficient a{i}={a} must be >= 1")
    if period:
        return PeriodicCF(tuple(pre), tuple(period))
    return FiniteCF(tuple(pre))


def format_cf(cf: FiniteCF | PeriodicCF) -> str:
    """Render with ';' after a0, ',' elsewhere, and the period in parentheses."""
    if isinstance(cf, FiniteCF):
        return _render(list(cf.coefficients), None)
    return _render(list(cf.pre_period), list(cf.period))


def _render(pre: list[int], period: list[int] | None) -> str:
    parts = []
    if pre:
        head, *tail = pre
        parts.append(str(head))
        if tail:
            parts.append(";")
            parts.append(",".join(str(a) for a in tail))
        elif period is not None:
            parts.append(";")
    if period is not None:
        if pre and pre[1:]:
            parts.append(",")
        parts.append("(" + ",".join(str(a) for a in period) + ")")
    return "[" + "".join(parts) + "]"
