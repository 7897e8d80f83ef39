import random

import pytest

from indpoly import graph as gc
from indpoly.count import (alpha, indpoly_enumerate, indpoly_recursive, is_very_well_covered,
                           is_well_covered, maximal_stable_sets)
from indpoly.graph import VertexCapError
from indpoly.poly import IntPoly
from oracles import brute_indpoly, brute_maximal_sizes, random_edges


def test_enumerate_examples():
    assert indpoly_enumerate(gc.empty_graph(0)) == IntPoly([1])
    assert indpoly_enumerate(gc.star(3)) == IntPoly([1, 4, 3, 1])
    assert indpoly_enumerate(gc.path(5)).coeffs == tuple(brute_indpoly(5, gc.path(5).edges()))
    assert indpoly_enumerate(gc.path(5)) == IntPoly([1, 5, 6, 1])
    with pytest.raises(VertexCapError):
        indpoly_enumerate(gc.empty_graph(31))


def test_recursive_examples():
    assert indpoly_recursive(gc.complete(3)) == IntPoly([1, 3])
    assert indpoly_recursive(gc.cycle(5)) == IntPoly(brute_indpoly(5, gc.cycle(5).edges()))
    assert indpoly_recursive(gc.cycle(5)) == IntPoly([1, 5, 5])
    p8s = indpoly_recursive(gc.corona_k1(gc.path(8)))
    assert p8s.degree == 8
    assert (p8s ** 2).coeffs[-3:] == (177610, 34100, 3025)
    assert (p8s ** 2)[10] == 2334666


def test_recursive_handles_deep_graphs():
    g = gc.corona_k1(gc.path(600))
    p = indpoly_recursive(g)
    assert p.degree == 600 and p[1] == 1200


def test_alpha():
    assert alpha(gc.complete(7)) == 1
    assert alpha(gc.path(5)) == 3
    g = gc.Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4)])
    assert alpha(gc.corona_k1(g)) == 6


def test_maximal_stable_sets():
    assert set(maximal_stable_sets(gc.complete(3)).sets) == {frozenset({i}) for i in range(3)}
    assert maximal_stable_sets(gc.path(4)).sizes == [2, 2, 2]
    fam = maximal_stable_sets(gc.path(3))
    assert set(fam.sets) == {frozenset({1}), frozenset({0, 2})}
    assert maximal_stable_sets(gc.empty_graph(0)).sizes == [0]


def test_well_covered():
    assert is_well_covered(gc.cycle(7))
    assert not is_well_covered(gc.path(3))
    assert is_well_covered(gc.path(4))
    assert is_very_well_covered(gc.path(4))
    assert not is_very_well_covered(gc.cycle(7))
    assert not is_very_well_covered(gc.empty_graph(2))
    assert is_very_well_covered(gc.corona_k1(gc.complete(5)))


def test_oracle_sweep_small():
    rng = random.Random(3)
    for _ in range(150):
        n = rng.randint(0, 10)
        edges = random_edges(rng, n, rng.choice([0.2, 0.5, 0.8]))
        g = gc.Graph(n, edges)
        expected = IntPoly(brute_indpoly(n, edges))
        assert indpoly_enumerate(g) == expected
        assert indpoly_recursive(g) == expected
        sizes = brute_maximal_sizes(n, edges)
        assert maximal_stable_sets(g).sizes == sizes
        assert max(sizes) == expected.degree


def test_multiplicative_over_union():
    rng = random.Random(5)
    for _ in range(50):
        a = gc.Graph(k := rng.randint(0, 7), random_edges(rng, k))
        b = gc.Graph(m := rng.randint(0, 7), random_edges(rng, m))
        assert indpoly_recursive(gc.disjoint_union(a, b)) == \
            indpoly_recursive(a) * indpoly_recursive(b)


def test_coefficients_positive_up_to_alpha():
    rng = random.Random(11)
    for _ in range(50):
        n = rng.randint(1, 12)
        p = indpoly_recursive(gc.Graph(n, random_edges(rng, n)))
        assert all(c >= 1 for c in p.coeffs)
        assert p[0] == 1 and p[1] == n


def test_corona_very_well_covered_random():
    rng = random.Random(13)
    done = 0
    while done < 30:
        n = rng.randint(1, 10)
        g = gc.Graph(n, random_edges(rng, n, 0.3))
        if n > 1 and 0 in g.degrees():
            continue
        star = gc.corona_k1(g)
        assert is_very_well_covered(star)
        assert alpha(star) == n
        done += 1
