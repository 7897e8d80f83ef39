import pytest
from hypothesis import given, settings, strategies as st

from indpoly.calculus import Base, Corona, Join, Union, UnionPow
from indpoly.exprlang import ParseError, parse, render


def test_parse_examples():
    assert parse("corona(P(4))") == Corona(Base("P", (4,)))
    mt = parse("join(du(4,K(10)),Kmp(4^1701))")
    assert mt == Join(UnionPow(4, Base("K", (10,))), Base("Kmp", ((4, 1701),)))
    assert parse("  union( K(1) ,\tP(3) ) ") == Union(Base("K", (1,)), Base("P", (3,)))
    assert parse("Kmp(2, 3^2)") == Base("Kmp", ((2, 1), (3, 2)))
    assert parse("Kme(4)") == Base("Kme", (4,))
    assert parse("star(3)") == Base("star", (3,))


def test_render_examples():
    assert render(Corona(Base("K", (3,)))) == "corona(K(3))"
    assert render(UnionPow(3, Base("K", (2,)))) == "du(3,K(2))"
    assert render(Base("Kmp", ((4, 1701), (2, 1)))) == "Kmp(4^1701,2)"


@pytest.mark.parametrize("text, offset, expected", [
    ("K(", 2, "count"),
    ("K(3", 3, "')'"),
    ("K(3))", 4, "end of input"),
    ("union(K(1) K(2))", 11, "','"),
    ("corona(P(4)", 11, "')'"),
    ("foo(3)", 0, "expression"),
    ("", 0, "expression"),
    ("du(0,K(1))", 3, "copy count >= 1"),
    ("Kmp(0)", 4, "part size and multiplicity >= 1"),
])
def test_parse_errors(text, offset, expected):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.position == offset
    assert info.value.expected == expected
    assert 0 <= info.value.position <= len(text)


def test_range_errors_at_parse_time():
    with pytest.raises(ParseError) as info:
        parse("join(K(1),C(2))")
    assert info.value.position == 10
    with pytest.raises(ParseError):
        parse("Kme(1)")


def test_unbalanced_parentheses_rejected():
    for text in ["corona(K(3)", "corona(K(3)))", "(K(3))", "union(K(1),K(2)"]:
        with pytest.raises(ParseError):
            parse(text)


counts = st.integers(0, 30)
bases = st.one_of(
    st.builds(lambda k, n: Base(k, (n,)), st.sampled_from(["K", "P", "E", "star"]), counts),
    st.builds(lambda n: Base("C", (n,)), st.integers(3, 30)),
    st.builds(lambda n: Base("Kme", (n,)), st.integers(2, 30)),
    st.builds(lambda ps: Base("Kmp", tuple(ps)),
              st.lists(st.tuples(st.integers(1, 9), st.integers(1, 2000)), min_size=1, max_size=4)),
)
exprs = st.recursive(bases, lambda inner: st.one_of(
    st.builds(Union, inner, inner),
    st.builds(Join, inner, inner),
    st.builds(UnionPow, st.integers(1, 9), inner),
    st.builds(Corona, inner),
), max_leaves=12)


@settings(max_examples=1000)
@given(exprs)
def test_roundtrip(e):
    assert parse(render(e)) == e
