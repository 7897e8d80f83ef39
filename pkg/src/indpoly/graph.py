"""Finite simple graphs on dense vertex indices, builders and combinators.

A :class:`Graph` is immutable once built.  Combinators fix their index
conventions so that results are deterministic:

* ``disjoint_union(g1, g2)`` and ``zykov_sum(g1, g2)`` keep ``g1`` at
  ``0..n1-1`` and shift ``g2`` to ``n1..n1+n2-1``.
* ``corona_k1(g)`` keeps ``g`` at ``0..n-1`` and attaches the pendant
  neighbour of vertex ``i`` at index ``n + i``.
"""
from __future__ import annotations

import math
from collections import deque
from itertools import combinations
from typing import Iterable, Sequence

MAX_VERTICES = 4096


class VertexCapError(ValueError):
    """Raised when a graph would exceed a fixed vertex cap."""


def _check_cap(n: int, cap: int = MAX_VERTICES) -> None:
    if n > cap:
        raise VertexCapError(f"{n} vertices exceeds the cap of {cap}")


class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        _check_cap(n)
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in nbrs)
        self._masks: tuple[int, ...] | None = None

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]]) -> "Graph":
        return cls(len(adj), ((u, v) for u, vs in enumerate(adj) for v in vs if u < v))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitmasks (bit ``v`` set for neighbour ``v``)."""
        if self._masks is None:
            self._masks = tuple(sum(1 << w for w in s) for s in self.adj)
        return self._masks

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()!r})"


# -- builders ---------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete(n: int) -> Graph:
    _check_cap(n)
    return Graph(n, combinations(range(n), 2))


def path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """K_{1,n}: hub 0 joined to leaves 1..n."""
    return Graph(n + 1, ((0, i) for i in range(1, n + 1)))


def complete_minus_edge(n: int) -> Graph:
    """K_n with the edge {0, 1} removed."""
    if n < 2:
        raise ValueError(f"complete_minus_edge needs n >= 2, got {n}")
    _check_cap(n)
    return Graph(n, (e for e in combinations(range(n), 2) if e != (0, 1)))


def multipartite(parts: Sequence[int]) -> Graph:
    """Complete multipartite graph; parts occupy consecutive index blocks."""
    if any(p < 1 for p in parts):
        raise ValueError("every part needs at least one vertex")
    n = sum(parts)
    _check_cap(n)
    label = [i for i, p in enumerate(parts) for _ in range(p)]
    return Graph(n, ((u, v) for u, v in combinations(range(n), 2) if label[u] != label[v]))


# -- combinators ------------------------------------------------------------

def _shifted(g: Graph, offset: int) -> list[tuple[int, int]]:
    return [(u + offset, v + offset) for u, v in g.edges()]


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    return Graph(g1.n + g2.n, g1.edges() + _shifted(g2, g1.n))


def disjoint_copies(k: int, g: Graph) -> Graph:
    if k < 1:
        raise ValueError("need at least one copy")
    _check_cap(k * g.n)
    edges = []
    for i in range(k):
        edges += _shifted(g, i * g.n)
    return Graph(k * g.n, edges)


def zykov_sum(g1: Graph, g2: Graph) -> Graph:
    """Join: disjoint union plus every edge between the two sides."""
    n1, n2 = g1.n, g2.n
    _check_cap(n1 + n2)
    cross = [(u, n1 + v) for u in range(n1) for v in range(n2)]
    return Graph(n1 + n2, g1.edges() + _shifted(g2, n1) + cross)


def corona_k1(g: Graph) -> Graph:
    """Attach one pendant vertex ``n + i`` to every vertex ``i``."""
    n = g.n
    return Graph(2 * n, g.edges() + [(i, n + i) for i in range(n)])


# -- structure --------------------------------------------------------------

def neighborhood(g: Graph, v: int) -> frozenset[int]:
    return g.adj[v]


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    return g.adj[v] | {v}


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Subgraph on ``keep``, relabelled to ``0..k-1`` in increasing order."""
    order = sorted(set(keep))
    if order and not (0 <= order[0] and order[-1] < g.n):
        raise ValueError("kept vertices out of range")
    index = {v: i for i, v in enumerate(order)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    return Graph(len(order), edges)


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    # the empty graph counts as connected
    return len(components(g)) <= 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and is_connected(g) and g.num_edges == g.n - 1


def girth(g: Graph) -> float:
    """Length of a shortest cycle, or ``math.inf`` for forests.

    ``math.inf`` compares greater than every integer, so ``girth(g) >= 6``
    holds for every forest.
    """
    best = math.inf
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def pendant_edges(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u, v in g.edges() if g.degree(u) == 1 or g.degree(v) == 1]


def pendant_perfect_matching(g: Graph) -> bool:
    """True when the pendant edges cover every vertex exactly once."""
    covered = [0] * g.n
    for u, v in pendant_edges(g):
        covered[u] += 1
        covered[v] += 1
    return all(c == 1 for c in covered)


def is_cycle_graph(g: Graph) -> bool:
    return g.n >= 3 and all(d == 2 for d in g.degrees()) and is_connected(g)
