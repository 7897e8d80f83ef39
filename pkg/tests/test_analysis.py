import csv
import io
import json
import random

import pytest

from indpoly import graph as gc
from indpoly.analysis import (CSV_COLUMNS, TheoremViolation, analyze_star, corollary_family,
                              midpoint_inequality, mode_window, monotone_chain_ok, sweep_exhaustive,
                              sweep_sample, sweep_verify, theorem3_check)
from indpoly.exprlang import parse
from indpoly.poly import IntPoly
from oracles import random_tree_edges


def test_mode_window_examples():
    assert mode_window(3, 1) == (2, 2)
    assert mode_window(16, 4) == (8, 10)
    assert mode_window(7, 4) == (4, 5)
    assert mode_window(5, 2) == (3, 3)
    assert mode_window(4, 2) == (2, 3)
    assert mode_window(6, 3) == (3, 4)
    with pytest.raises(ValueError):
        mode_window(10, 5)
    with pytest.raises(ValueError):
        mode_window(3, 0)


def test_analyze_star_examples():
    r = analyze_star(parse("du(3,K(1))"))
    assert r.star_poly == IntPoly([1, 6, 12, 8])
    assert r.mode.mode_set == (2,) and r.window == (2, 3) and r.ok

    r = analyze_star(parse("union(K(1),P(3))"))
    assert r.star_poly == IntPoly([1, 8, 22, 25, 10])
    assert r.mode.mode_set == (3,) and r.window == (2, 3) and r.window_ok

    r = analyze_star(gc.star(4))
    assert r.star_poly == IntPoly([1, 10, 36, 62, 52, 17])
    assert r.alpha == 4 and r.mode.mode_set == (3,) and r.window == (3, 4) and r.ok
    assert r.very_wellcovered_star is True


def test_analyze_star_high_alpha():
    r = analyze_star(parse("du(2,P(8))"))
    assert r.alpha == 8 and r.n == 16
    assert r.window is None and r.window_ok is None
    assert r.mode.mode_set == (10,) and r.mode.unimodal
    assert r.ok


def test_monotone_chain():
    # 4K1: n = 4, alpha = 4, t = (1+2x)^4
    assert monotone_chain_ok([1, 8, 24, 32, 16], 4, 4)
    assert monotone_chain_ok([1, 8, 24, 32, 16], 4, 3)
    assert not monotone_chain_ok([1, 8, 30, 20, 25], 4, 3)
    assert not monotone_chain_ok([1, 8, 7, 9, 2], 4, 2)
    # midpoint condition: 2*10 < 12 + 12
    assert not monotone_chain_ok([1, 5, 9, 12, 10, 12, 3], 6, 4)


def test_midpoint_examples():
    direct, closed = midpoint_inequality(IntPoly([1, 4, 6, 4, 1]), 4)
    assert direct == closed == 2 * 32 - 24 - 16
    direct, closed = midpoint_inequality(IntPoly([1, 6]), 6)
    assert direct == closed
    with pytest.raises(ValueError):
        midpoint_inequality(IntPoly([1, 5]), 5)
    with pytest.raises(ValueError):
        midpoint_inequality(IntPoly([1, 1, 1, 1, 1, 1]), 10)


def test_midpoint_random():
    rng = random.Random(8)
    for _ in range(300):
        m = rng.randint(2, 12)
        s = IntPoly([rng.randint(0, 200) for _ in range(rng.randint(1, 5))])
        direct, closed = midpoint_inequality(s, 2 * m)
        assert direct == closed
        if m >= 3 or s[4] == 0:
            assert direct >= 0
    # the s_4 weight is negative at m = 2, which is why that case is special
    assert midpoint_inequality(IntPoly([0, 0, 0, 0, 1]), 4) == (-1, -1)


def test_theorem3_examples():
    v = theorem3_check(gc.path(4))
    assert v.applicable and v.well_covered and v.pendant_matching and v.agrees
    v = theorem3_check(gc.path(5))
    assert v.applicable and not v.well_covered and not v.pendant_matching and v.agrees
    assert not theorem3_check(gc.cycle(7)).applicable
    assert not theorem3_check(gc.complete(1)).applicable
    assert not theorem3_check(gc.cycle(5)).applicable
    assert theorem3_check(gc.cycle(8)).applicable


def test_theorem3_coronas_of_trees():
    rng = random.Random(4)
    for _ in range(40):
        n = rng.randint(1, 12)
        t = gc.corona_k1(gc.Graph(n, random_tree_edges(rng, n)))
        v = theorem3_check(t)
        assert v.applicable and v.well_covered and v.pendant_matching


def test_corollary_examples():
    r = corollary_family(3, 1)
    assert r.star_poly == IntPoly([1, 6, 9, 4])
    r = corollary_family(6, 4)
    assert r.alpha == 4 and r.mode.unimodal and r.window_ok
    r = corollary_family(5, 2)
    assert r.alpha == 2 and r.window == (3, 3) and r.window_ok
    with pytest.raises(ValueError):
        corollary_family(5, 4)
    with pytest.raises(ValueError):
        corollary_family(2, 1)


def test_theorem_violation_is_assertion():
    assert issubclass(TheoremViolation, AssertionError)


def test_sweep_small_exhaustive():
    rep = sweep_exhaustive(5)
    assert not rep.violations
    assert sum(rep.count_by_alpha().values()) + rep.high_alpha == sum(
        2 ** (n * (n - 1) // 2) for n in range(1, 6))


def test_only_empty_graph_has_alpha_four_on_four_vertices():
    rep = sweep_exhaustive(4, alphas={4})
    assert [(r.n, r.edges) for r in rep.rows] == [(4, ())]
    assert rep.rows[0].mode_lo == 3


def test_sweep_caps():
    with pytest.raises(ValueError):
        sweep_exhaustive(7)
    with pytest.raises(ValueError):
        sweep_verify(99, "exhaustive")
    with pytest.raises(ValueError):
        sweep_verify(8, "sample", samples=3)


def test_sample_is_seeded():
    a = sweep_sample(9, 60, seed=5, alphas={3, 4})
    b = sweep_sample(9, 60, seed=5, alphas={3, 4})
    assert a.rows == b.rows and not a.violations
    assert {r.alpha for r in a.rows} <= {3, 4}
    assert json.loads(a.to_json())["seed"] == 5


def test_sweep_csv():
    rep = sweep_exhaustive(3)
    rows = list(csv.reader(io.StringIO(rep.to_csv())))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert len(rows) == 1 + len(rep.rows)
    assert all(r[-1] == "true" for r in rows[1:])


def test_high_alpha_recorded_not_asserted():
    rep = sweep_exhaustive(6, alphas={1})
    assert rep.high_alpha > 0
    assert all(r.alpha == 1 for r in rep.rows)

