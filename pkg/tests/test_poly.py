import json

import pytest
from hypothesis import given, strategies as st

from indpoly.poly import IntPoly, evaluate, shift_x, unimodality

polys = st.lists(st.integers(-50, 50), max_size=7).map(IntPoly)


def test_canonical_form():
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPoly([0, 0]).is_zero() and IntPoly().degree == -1
    with pytest.raises(TypeError):
        IntPoly([1.0])


def test_arithmetic_examples():
    p = IntPoly([1, 2])
    assert p * p == IntPoly([1, 4, 4])
    assert p ** 4 == IntPoly([1, 8, 24, 32, 16])
    assert (p - p).is_zero()
    assert shift_x(p) == IntPoly([0, 1, 2])
    assert p ** 0 == 1
    with pytest.raises(ValueError):
        p ** -1


def test_evaluate():
    assert evaluate(IntPoly([1, 2]), 1) == 3
    assert IntPoly([1, 4, 3, 1]).evaluate(1) == 9
    assert IntPoly([7, 5]).evaluate(0) == 7


def test_render_and_json():
    assert str(IntPoly([1, 8, 21])) == "1 + 8x + 21x^2"
    assert str(IntPoly([0, 1, -3])) == "x - 3x^2"
    assert str(IntPoly()) == "0"
    big = IntPoly([1, 10 ** 40])
    doc = json.dumps(big.to_json())
    assert IntPoly.from_json(json.loads(doc)) == big


def test_unimodality_examples():
    r = unimodality(IntPoly([1, 4, 3, 1]))
    assert r.unimodal and r.mode_set == (1,)
    assert not unimodality(IntPoly([1, 118, 108, 216])).unimodal
    r = unimodality(IntPoly([1]))
    assert r.unimodal and r.mode_set == (0,)
    r = unimodality([1, 3, 3, 1])
    assert r.unimodal and r.mode_set == (1, 2)
    with pytest.raises(ValueError):
        unimodality(IntPoly([1, -1]))


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - q + q == p


@given(polys, st.integers(0, 5))
def test_pow_is_repeated_mul(p, k):
    acc = IntPoly([1])
    for _ in range(k):
        acc = acc * p
    assert p ** k == acc


@given(st.lists(st.integers(0, 30), min_size=1, max_size=8), st.integers(0, 4))
def test_unimodality_ignores_trailing_zeros(coeffs, pad):
    assert unimodality(coeffs + [0] * pad) == unimodality(IntPoly(coeffs))


@given(st.lists(st.integers(0, 30), min_size=1, max_size=9))
def test_unimodality_matches_definition(a):
    a = IntPoly(a).coeffs
    if not a:
        return
    by_definition = any(all(a[i] <= a[i + 1] for i in range(k))
                        and all(a[i] >= a[i + 1] for i in range(k, len(a) - 1))
                        for k in range(len(a)))
    r = unimodality(IntPoly(a))
    assert r.unimodal == by_definition
    if r.unimodal:
        ms = r.mode_set
        assert list(ms) == list(range(ms[0], ms[-1] + 1))
