"""Dense univariate polynomials over the integers, and unimodality."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest
from typing import Iterable, Sequence


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPoly:
    """Immutable polynomial ``a_0 + a_1 x + ... + a_d x^d`` with ``int`` coefficients.

    Coefficients are stored lowest degree first with trailing zeros removed,
    so the zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _trim(coeffs)
        for a in c:
            if not isinstance(a, int) or isinstance(a, bool):
                raise TypeError(f"coefficients must be int, got {type(a).__name__}")
        self.coeffs: tuple[int, ...] = c

    @classmethod
    def constant(cls, a: int) -> "IntPoly":
        return cls([a])

    @classmethod
    def x(cls) -> "IntPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        if k < 0:
            raise IndexError("negative exponent")
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "IntPoly":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return IntPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return IntPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-a for a in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return IntPoly(a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p, q = self.coeffs, other.coeffs
        if not p or not q:
            return IntPoly()
        out = [0] * (len(p) + len(q) - 1)
        for i, a in enumerate(p):
            if a:
                for j, b in enumerate(q):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative int")
        result, base = IntPoly([1]), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift_x(self, times: int = 1) -> "IntPoly":
        """Multiply by ``x**times``."""
        if self.is_zero():
            return self
        return IntPoly((0,) * times + self.coeffs)

    def evaluate(self, x: int) -> int:
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    __call__ = evaluate

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k, a in enumerate(self.coeffs):
            if a == 0:
                continue
            mag = abs(a)
            if k == 0:
                body = str(mag)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if mag == 1 else f"{mag}{mono}"
            if not parts:
                parts.append(body if a > 0 else f"-{body}")
            else:
                parts.append(("+ " if a > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"

    def to_json(self) -> list[str]:
        """Coefficients as decimal strings; the zero polynomial is ``["0"]``."""
        return [str(a) for a in self.coeffs] or ["0"]

    @classmethod
    def from_json(cls, items: Sequence[str]) -> "IntPoly":
        return cls(int(s) for s in items)


def add(p: IntPoly, q: IntPoly) -> IntPoly:
    return p + q


def sub(p: IntPoly, q: IntPoly) -> IntPoly:
    return p - q


def mul(p: IntPoly, q: IntPoly) -> IntPoly:
    return p * q


def pow(p: IntPoly, k: int) -> IntPoly:  # noqa: A001
    return p ** k


def shift_x(p: IntPoly) -> IntPoly:
    return p.shift_x()


def evaluate(p: IntPoly, x: int) -> int:
    return p.evaluate(x)


# -- unimodality ------------------------------------------------------------

@dataclass(frozen=True)
class ModeReport:
    unimodal: bool
    mode_set: tuple[int, ...]
    max_value: int


def unimodality(p: IntPoly | Sequence[int]) -> ModeReport:
    """Check ``a_0 <= ... <= a_k >= ... >= a_d`` for some ``k``.

    ``mode_set`` holds every index attaining the maximum.  Negative
    coefficients are rejected.
    """
    a = p.coeffs if isinstance(p, IntPoly) else _trim(p)
    if any(c < 0 for c in a):
        raise ValueError("unimodality is only defined here for nonnegative coefficients")
    if not a:
        return ModeReport(True, (), 0)
    top = max(a)
    modes = tuple(i for i, c in enumerate(a) if c == top)
    # a unimodal sequence is unimodal about its first maximiser
    k = modes[0]
    rising = all(a[i] <= a[i + 1] for i in range(k))
    falling = all(a[i] >= a[i + 1] for i in range(k, len(a) - 1))
    return ModeReport(rising and falling, modes, top)
