"""Independence polynomials of graph expressions without building the graph.

Expressions are small trees over named base graphs and four operators:

========================  ==========================================
``Union(a, b)``           disjoint union, ``I = I(a) I(b)``
``UnionPow(k, a)``        ``k`` disjoint copies, ``I = I(a)**k``
``Join(a, b)``            Zykov sum, ``I = I(a) + I(b) - 1``
``Corona(a)``             pendant vertex on every vertex of ``a``
========================  ==========================================

The corona rule needs the operand's order, so evaluation carries
``(polynomial, vertex count)`` pairs up the tree.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Union as _U

from . import graph as gc
from .poly import IntPoly, unimodality

ONE = IntPoly([1])
ONE_PLUS_X = IntPoly([1, 1])

BASE_KINDS = ("K", "P", "C", "E", "star", "Kme", "Kmp")


@dataclass(frozen=True)
class Base:
    """Named base graph.

    ``params`` is ``(n,)`` for every kind except ``Kmp``, whose params are
    ``((size, multiplicity), ...)`` pairs.
    """
    kind: str
    params: tuple

    def __post_init__(self):
        validate_base(self.kind, self.params)


@dataclass(frozen=True)
class Union:
    left: "GraphExpr"
    right: "GraphExpr"


@dataclass(frozen=True)
class UnionPow:
    k: int
    expr: "GraphExpr"

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"disjoint copy count must be >= 1, got {self.k}")


@dataclass(frozen=True)
class Join:
    left: "GraphExpr"
    right: "GraphExpr"


@dataclass(frozen=True)
class Corona:
    expr: "GraphExpr"


GraphExpr = _U[Base, Union, UnionPow, Join, Corona]


def validate_base(kind: str, params: tuple) -> None:
    if kind not in BASE_KINDS:
        raise ValueError(f"unknown base graph {kind!r}")
    if kind == "Kmp":
        if not params:
            raise ValueError("Kmp needs at least one part")
        for size, mult in params:
            if size < 1 or mult < 1:
                raise ValueError("Kmp part sizes and multiplicities must be >= 1")
        return
    if len(params) != 1 or params[0] < 0:
        raise ValueError(f"{kind} takes one nonnegative count")
    n = params[0]
    if kind == "C" and n < 3:
        raise ValueError(f"C needs n >= 3, got {n}")
    if kind == "Kme" and n < 2:
        raise ValueError(f"Kme needs n >= 2, got {n}")


# -- binomial transform -----------------------------------------------------

def _column_sum(v: IntPoly, n: int, alternate: bool) -> IntPoly:
    """``out_k = sum_j v_j C(n - j, k - j)``, signed by ``(-1)^(k+j)`` if ``alternate``.

    Each column's binomials come from the multiplicative recurrence
    ``C(N, r+1) = C(N, r) (N - r) / (r + 1)``, exact in integers.
    """
    out = [0] * (n + 1)
    for j, vj in enumerate(v.coeffs):
        if not vj:
            continue
        top, c = n - j, 1
        for r in range(top + 1):
            out[j + r] += -vj * c if alternate and r & 1 else vj * c
            c = c * (top - r) // (r + 1)
    return IntPoly(out)


def forward_transform(s: IntPoly, n: int) -> IntPoly:
    """Coefficients of I(G*) from those of I(G) for a skeleton of order ``n``.

    ``t_k = sum_{j<=k} s_j * C(n - j, k - j)`` for ``k = 0..n``.
    """
    if s.degree > n:
        raise ValueError(f"degree {s.degree} exceeds skeleton order {n}")
    return _column_sum(s, n, alternate=False)


def inverse_transform(t: IntPoly, n: int) -> IntPoly:
    """Undo :func:`forward_transform`; may yield negative coefficients.

    ``s_k = sum_{j<=k} (-1)^(k+j) t_j C(n - j, n - k)``.
    """
    if t.degree > n:
        raise ValueError(f"degree {t.degree} exceeds skeleton order {n}")
    # C(n-j, n-k) == C(n-j, k-j)
    return _column_sum(t, n, alternate=True)


@dataclass(frozen=True)
class TransformMatrix:
    """Lower-triangular ``(n+1) x cols`` matrix with entries ``C(n-j, k-j)``."""
    n: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def column(self, j: int) -> list[int]:
        return [row[j] for row in self.entries]

    def apply(self, s: IntPoly) -> IntPoly:
        if s.degree >= self.cols:
            raise ValueError("vector longer than the matrix has columns")
        return IntPoly(sum(a * s[j] for j, a in enumerate(row)) for row in self.entries)


def transform_matrix(n: int, cols: int) -> TransformMatrix:
    if not 0 <= cols <= n + 1:
        raise ValueError(f"cols must lie in 0..{n + 1}")
    # math.comb returns 0 when k - j > n - j; k < j is masked explicitly
    rows = tuple(tuple(comb(n - j, k - j) if k >= j else 0 for j in range(cols))
                 for k in range(n + 1))
    return TransformMatrix(n, cols, rows)


# -- base polynomials -------------------------------------------------------

@lru_cache(maxsize=None)
def _path_poly(n: int) -> IntPoly:
    # I(P_n) = I(P_{n-1}) + x I(P_{n-2}), iterated to keep the stack flat
    a, b = ONE, IntPoly([1, 1])
    if n == 0:
        return a
    for _ in range(n - 1):
        a, b = b, b + a.shift_x()
    return b


def _cycle_poly(n: int) -> IntPoly:
    return _path_poly(n - 1) + _path_poly(n - 3).shift_x()


def base_poly(b: Base) -> IntPoly:
    kind = b.kind
    if kind == "Kmp":
        return ONE + sum(((ONE_PLUS_X ** size - ONE) * mult for size, mult in b.params), IntPoly())
    (n,) = b.params
    if kind == "K":
        return IntPoly([1, n])
    if kind == "E":
        return ONE_PLUS_X ** n
    if kind == "P":
        return _path_poly(n)
    if kind == "C":
        return _cycle_poly(n)
    if kind == "star":
        return ONE_PLUS_X ** n + IntPoly.x()
    if kind == "Kme":
        return IntPoly([1, n, 1])
    raise AssertionError(kind)


def base_order(b: Base) -> int:
    if b.kind == "Kmp":
        return sum(size * mult for size, mult in b.params)
    (n,) = b.params
    return n + 1 if b.kind == "star" else n


# -- evaluation -------------------------------------------------------------

def eval_with_order(e: GraphExpr) -> tuple[IntPoly, int]:
    """``(I(e), |V(e)|)`` computed from closed forms only."""
    if isinstance(e, Base):
        return base_poly(e), base_order(e)
    if isinstance(e, Union):
        p, n1 = eval_with_order(e.left)
        q, n2 = eval_with_order(e.right)
        return p * q, n1 + n2
    if isinstance(e, UnionPow):
        p, n = eval_with_order(e.expr)
        return p ** e.k, n * e.k
    if isinstance(e, Join):
        p, n1 = eval_with_order(e.left)
        q, n2 = eval_with_order(e.right)
        return p + q - ONE, n1 + n2
    if isinstance(e, Corona):
        p, n = eval_with_order(e.expr)
        return forward_transform(p, n), 2 * n
    raise TypeError(f"not a graph expression: {e!r}")


def eval_expr(e: GraphExpr) -> IntPoly:
    return eval_with_order(e)[0]


def corona_skeleton(e: GraphExpr) -> GraphExpr | None:
    """``S`` with ``e == S*`` when ``e`` is a corona or a disjoint union of coronas."""
    if isinstance(e, Corona):
        return e.expr
    if isinstance(e, Union):
        left, right = corona_skeleton(e.left), corona_skeleton(e.right)
        if left is not None and right is not None:
            return Union(left, right)
    if isinstance(e, UnionPow):
        inner = corona_skeleton(e.expr)
        if inner is not None:
            return UnionPow(e.k, inner)
    return None


def order(e: GraphExpr) -> int:
    if isinstance(e, Base):
        return base_order(e)
    if isinstance(e, (Union, Join)):
        return order(e.left) + order(e.right)
    if isinstance(e, UnionPow):
        return e.k * order(e.expr)
    if isinstance(e, Corona):
        return 2 * order(e.expr)
    raise TypeError(f"not a graph expression: {e!r}")


def materialize(e: GraphExpr) -> gc.Graph:
    """Build the concrete graph; refuses anything above the vertex cap."""
    n = order(e)
    if n > gc.MAX_VERTICES:
        raise gc.VertexCapError(f"expression has {n} vertices, cap is {gc.MAX_VERTICES}")
    if isinstance(e, Base):
        kind, params = e.kind, e.params
        if kind == "Kmp":
            return gc.multipartite([size for size, mult in params for _ in range(mult)])
        builder = {"K": gc.complete, "P": gc.path, "C": gc.cycle, "E": gc.empty_graph,
                   "star": gc.star, "Kme": gc.complete_minus_edge}[kind]
        return builder(params[0])
    if isinstance(e, Union):
        return gc.disjoint_union(materialize(e.left), materialize(e.right))
    if isinstance(e, UnionPow):
        return gc.disjoint_copies(e.k, materialize(e.expr))
    if isinstance(e, Join):
        return gc.zykov_sum(materialize(e.left), materialize(e.right))
    if isinstance(e, Corona):
        return gc.corona_k1(materialize(e.expr))
    raise TypeError(f"not a graph expression: {e!r}")


def column_unimodal(m: TransformMatrix) -> bool:
    return all(unimodality(m.column(j)).unimodal for j in range(m.cols))
