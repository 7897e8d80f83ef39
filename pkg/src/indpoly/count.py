"""Exact stable-set counting on concrete graphs.

Two independent routes to the independence polynomial:

* :func:`indpoly_enumerate` lists every stable set (oracle, ``n <= 30``);
* :func:`indpoly_recursive` uses ``I(G) = I(G - v) + x I(G - N[v])`` with
  component splitting and a memo keyed on the induced vertex subset.

Vertex subsets are plain ``int`` bitmasks over the parent graph's indices.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass

from .graph import MAX_VERTICES, Graph, VertexCapError
from .poly import IntPoly

ORACLE_MAX_VERTICES = 30


def _require_oracle(g: Graph) -> None:
    if g.n > ORACLE_MAX_VERTICES:
        raise VertexCapError(
            f"{g.n} vertices exceeds the enumeration cap of {ORACLE_MAX_VERTICES}")


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def is_stable(g: Graph, vertices) -> bool:
    vs = set(vertices)
    return all(not (g.adj[v] & vs) for v in vs)


def indpoly_enumerate(g: Graph) -> IntPoly:
    """Count stable k-subsets by listing every stable set once.

    Depth-first over vertices in increasing index order; each stable set is
    produced exactly once as the sequence of its members.
    """
    _require_oracle(g)
    masks = g.masks
    counts = [0] * (g.n + 1)
    counts[0] = 1
    # (size of current set, candidates greater than its last member)
    stack = [(0, (1 << g.n) - 1)]
    while stack:
        k, cand = stack.pop()
        for v in _bits(cand):
            counts[k + 1] += 1
            later = cand & ~((2 << v) - 1) & ~masks[v]
            if later:
                stack.append((k + 1, later))
    return IntPoly(counts)


def _component_masks(masks: tuple[int, ...], mask: int) -> list[int]:
    comps = []
    while mask:
        seed = mask & -mask
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in _bits(frontier):
                grow |= masks[v]
            frontier = grow & mask & ~comp
            comp |= frontier
        comps.append(comp)
        mask &= ~comp
    return comps


class _Recurrence:
    def __init__(self, g: Graph):
        self.masks = g.masks
        self.memo: dict[int, tuple[int, ...]] = {0: (1,)}

    @staticmethod
    def _mul(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * (len(p) + len(q) - 1)
        for i, a in enumerate(p):
            for j, b in enumerate(q):
                out[i + j] += a * b
        return tuple(out)

    def poly(self, mask: int) -> tuple[int, ...]:
        hit = self.memo.get(mask)
        if hit is not None:
            return hit
        comps = _component_masks(self.masks, mask)
        if len(comps) > 1:
            result = (1,)
            for c in comps:
                result = self._mul(result, self.connected(c))
        else:
            result = self.connected(mask)
        self.memo[mask] = result
        return result

    def connected(self, mask: int) -> tuple[int, ...]:
        hit = self.memo.get(mask)
        if hit is not None:
            return hit
        masks = self.masks
        best, best_deg, min_deg, size = -1, -1, MAX_VERTICES, 0
        for v in _bits(mask):
            size += 1
            d = (masks[v] & mask).bit_count()
            if d > best_deg:
                best, best_deg = v, d
            min_deg = min(min_deg, d)
        if min_deg == size - 1:
            # clique: only singletons are stable
            result = (1, size)
        else:
            bit = 1 << best
            without = self.poly(mask & ~bit)
            inside = self.poly(mask & ~bit & ~masks[best])
            n = max(len(without), len(inside) + 1)
            out = list(without) + [0] * (n - len(without))
            for k, a in enumerate(inside):
                out[k + 1] += a
            result = tuple(out)
        self.memo[mask] = result
        return result


def indpoly_recursive(g: Graph) -> IntPoly:
    """Independence polynomial by the vertex-deletion recurrence.

    Pivots on a vertex of maximum degree (lowest index on ties) after
    splitting the current induced subgraph into connected components.
    """
    if g.n > MAX_VERTICES:
        raise VertexCapError(f"{g.n} vertices exceeds the cap of {MAX_VERTICES}")
    limit = sys.getrecursionlimit()
    need = 4 * g.n + 200
    if need > limit:
        sys.setrecursionlimit(need)
    try:
        return IntPoly(_Recurrence(g).poly((1 << g.n) - 1))
    finally:
        sys.setrecursionlimit(limit)


indpoly = indpoly_recursive


def alpha(g: Graph) -> int:
    """Stability number, the degree of the independence polynomial."""
    return indpoly_recursive(g).degree


@dataclass(frozen=True)
class StableSetFamily:
    sets: tuple[frozenset[int], ...]

    @property
    def sizes(self) -> list[int]:
        return sorted(len(s) for s in self.sets)


def maximal_stable_sets(g: Graph) -> StableSetFamily:
    """All maximal stable sets, via Bron-Kerbosch with pivoting on the complement."""
    _require_oracle(g)
    full = (1 << g.n) - 1
    # non-neighbours, excluding the vertex itself
    anti = [full & ~m & ~(1 << v) for v, m in enumerate(g.masks)]
    found: list[frozenset[int]] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(frozenset(_bits(r)))
            return
        u = max(_bits(p | x), key=lambda w: (anti[w] & p).bit_count())
        for v in _bits(p & ~anti[u]):
            bit = 1 << v
            expand(r | bit, p & anti[v], x & anti[v])
            p &= ~bit
            x |= bit

    expand(0, full, 0)
    return StableSetFamily(tuple(sorted(found, key=lambda s: (len(s), sorted(s)))))


def is_well_covered(g: Graph) -> bool:
    sizes = maximal_stable_sets(g).sizes
    return len(set(sizes)) <= 1


def is_very_well_covered(g: Graph) -> bool:
    if any(d == 0 for d in g.degrees()):
        return False
    fam = maximal_stable_sets(g)
    sizes = set(fam.sizes)
    return len(sizes) == 1 and g.n == 2 * sizes.pop()
