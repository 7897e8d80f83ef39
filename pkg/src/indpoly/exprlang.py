"""Text syntax for graph expressions.

Grammar (version 1)::

    expr     := base | "union(" expr "," expr ")" | "du(" count "," expr ")"
              | "join(" expr "," expr ")" | "corona(" expr ")"
    base     := "K(" count ")" | "P(" count ")" | "C(" count ")" | "E(" count ")"
              | "star(" count ")" | "Kme(" count ")" | "Kmp(" partlist ")"
    partlist := part ("," part)*
    part     := count | count "^" count        # size^multiplicity
    count    := decimal integer >= 0

Whitespace between tokens is ignored.  ``du(k, G)`` is ``k`` disjoint
copies of ``G``; ``Kmp(4^1701)`` is the complete 1701-partite graph with
four vertices per part.
"""
from __future__ import annotations

from .calculus import Base, Corona, GraphExpr, Join, Union, UnionPow, validate_base

GRAMMAR_VERSION = 1

_SINGLE_COUNT = ("K", "P", "C", "E", "star", "Kme")
_KEYWORDS = ("union", "du", "join", "corona", "Kmp") + _SINGLE_COUNT


class ParseError(ValueError):
    def __init__(self, position: int, expected: str, found: str):
        self.position = position
        self.expected = expected
        self.found = found
        super().__init__(f"at offset {position}: expected {expected}, found {found}")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _found(self) -> str:
        if self.pos >= len(self.text):
            return "end of input"
        return repr(self.text[self.pos])

    def _fail(self, expected: str, position: int | None = None, found: str | None = None):
        pos = self.pos if position is None else position
        raise ParseError(pos, expected, self._found() if found is None else found)

    def expect(self, ch: str) -> None:
        self._skip()
        if self.text.startswith(ch, self.pos):
            self.pos += len(ch)
        else:
            self._fail(repr(ch))

    def count(self) -> int:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self._fail("count")
        return int(self.text[start:self.pos])

    def word(self) -> tuple[str, int]:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        return self.text[start:self.pos], start

    def expr(self) -> GraphExpr:
        name, start = self.word()
        if name not in _KEYWORDS:
            self.pos = start
            self._fail("expression", found=repr(name) if name else None)
        self.expect("(")
        if name in ("union", "join"):
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect(")")
            return Union(left, right) if name == "union" else Join(left, right)
        if name == "corona":
            inner = self.expr()
            self.expect(")")
            return Corona(inner)
        if name == "du":
            self._skip()
            at = self.pos
            k = self.count()
            if k < 1:
                self._fail("copy count >= 1", position=at, found=str(k))
            self.expect(",")
            inner = self.expr()
            self.expect(")")
            return UnionPow(k, inner)
        if name == "Kmp":
            parts = [self.part()]
            self._skip()
            while self.text.startswith(",", self.pos):
                self.pos += 1
                parts.append(self.part())
                self._skip()
            self.expect(")")
            return self._base(name, tuple(parts), start)
        n = self.count()
        self.expect(")")
        return self._base(name, (n,), start)

    def part(self) -> tuple[int, int]:
        self._skip()
        at = self.pos
        size = self.count()
        mult = 1
        self._skip()
        if self.text.startswith("^", self.pos):
            self.pos += 1
            mult = self.count()
        if size < 1 or mult < 1:
            self._fail("part size and multiplicity >= 1", position=at,
                       found=self.text[at:self.pos])
        return size, mult

    def _base(self, kind: str, params: tuple, start: int) -> Base:
        try:
            validate_base(kind, params)
        except ValueError as exc:
            raise ParseError(start, f"valid {kind} parameters ({exc})",
                             self.text[start:self.pos]) from None
        return Base(kind, params)


def parse(text: str) -> GraphExpr:
    p = _Parser(text)
    e = p.expr()
    p._skip()
    if p.pos != len(text):
        p._fail("end of input")
    return e


def render(e: GraphExpr) -> str:
    if isinstance(e, Base):
        if e.kind == "Kmp":
            body = ",".join(str(s) if m == 1 else f"{s}^{m}" for s, m in e.params)
        else:
            body = str(e.params[0])
        return f"{e.kind}({body})"
    if isinstance(e, Union):
        return f"union({render(e.left)},{render(e.right)})"
    if isinstance(e, Join):
        return f"join({render(e.left)},{render(e.right)})"
    if isinstance(e, UnionPow):
        return f"du({e.k},{render(e.expr)})"
    if isinstance(e, Corona):
        return f"corona({render(e.expr)})"
    raise TypeError(f"not a graph expression: {e!r}")
