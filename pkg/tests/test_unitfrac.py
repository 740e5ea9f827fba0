from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles import naive_qs_pairs, naive_ufp, naive_ufp2

from ldp.unitfrac import (
    is_qs_witness,
    qs_pairs,
    qs_pairs_from_quadruples,
    ufp2,
    ufp_fixed_length,
)


@pytest.mark.parametrize(
    "q,expected",
    [(Fraction(1), [(2, 2)]), (Fraction(1, 2), [(3, 6), (4, 4)]), (Fraction(2, 3), [(2, 6), (3, 3)])],
)
def test_ufp2_examples(q, expected):
    assert ufp2(q) == expected


@given(st.integers(1, 12), st.integers(1, 12))
def test_ufp2_matches_naive(num, den):
    q = Fraction(num, den)
    assert ufp2(q) == naive_ufp2(q)


def test_ufp_fixed_length_examples():
    assert set(ufp_fixed_length(Fraction(1), 3)) == {(2, 3, 6), (2, 4, 4), (3, 3, 3)}
    assert set(ufp_fixed_length(Fraction(1), 2)) == {(2, 2)}
    assert set(ufp_fixed_length(Fraction(1, 2), 1)) == {(2,)}


@given(st.integers(1, 5), st.integers(1, 7), st.integers(1, 3))
def test_ufp_fixed_length_properties(num, den, n):
    q = Fraction(num, den)
    out = ufp_fixed_length(q, n)
    assert len(out) == len(set(out))
    for t in out:
        assert list(t) == sorted(t)
        assert sum(Fraction(1, b) for b in t) == q
    assert sorted(out) == sorted(naive_ufp(q, n))


def test_qs_pairs_iota_one():
    pairs = {(p.l1, p.l2) for p in qs_pairs(1)}
    assert pairs == {(2, 2), (2, 3), (2, 4), (2, 6), (3, 3), (3, 6), (4, 4)}
    by_pair = {(p.l1, p.l2): p for p in qs_pairs(1)}
    assert (1, 5) in by_pair[(2, 3)].witnesses


@pytest.mark.parametrize("iota", range(1, 7))
def test_qs_pairs_match_independent_routes(iota):
    fast = {(p.l1, p.l2) for p in qs_pairs(iota)}
    assert fast == naive_qs_pairs(iota)
    assert fast == {(p.l1, p.l2) for p in qs_pairs_from_quadruples(iota)}


@pytest.mark.parametrize("iota", range(1, 13))
def test_qs_witnesses_exact_and_bounded(iota):
    for p in qs_pairs(iota):
        assert 2 <= p.l1 <= p.l2
        assert p.l1 <= 4 * iota
        assert p.witnesses
        for a1, a2 in p.witnesses:
            assert is_qs_witness(iota, p.l1, p.l2, a1, a2)
