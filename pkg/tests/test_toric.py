from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles import perturb_toric, toric_box_search

from ldp.exact import columns, pairing
from ldp.toric import (
    CollinearColumns,
    NotUnitFractionTriple,
    build_toric_P,
    canonical_form_toric,
    class_group_torsion,
    classify_toric,
    det_pairs,
    g_matrix,
    gorenstein_data_toric,
    gorenstein_form_pair,
    is_fwpp_matrix,
    kernel_w,
    make_record,
    toric_normal_form,
    wfwv,
)

PLANE = ((1, 0, -1), (0, 1, -1))
COVER = ((1, 1, -3), (0, 4, -4))


@pytest.mark.parametrize(
    "v1,v2,u,iota",
    [
        ((1, 0), (0, 1), (1, 1), 1),
        ((1, 4), (-3, -4), (-1, Fraction(1, 2)), 2),
        ((1, 0), (-3, -4), (1, -1), 1),
    ],
)
def test_gorenstein_form_pair(v1, v2, u, iota):
    assert gorenstein_form_pair(v1, v2) == (u, iota)


def test_gorenstein_form_pair_collinear():
    with pytest.raises(CollinearColumns):
        gorenstein_form_pair((1, 2), (-2, -4))


@pytest.mark.parametrize("a,w", [((3, 3, 3), (1, 1, 1)), ((2, 3, 6), (3, 2, 1)), ((2, 4, 4), (2, 1, 1))])
def test_kernel_w(a, w):
    assert kernel_w(1, *a) == w
    G = g_matrix(1, *a)
    assert all(sum(g * x for g, x in zip(row, w)) == 0 for row in G)


def test_kernel_w_rejects_non_presentation():
    with pytest.raises(NotUnitFractionTriple):
        kernel_w(1, 2, 3, 7)


def test_wfwv_iota_one():
    assert set(wfwv(1)) == {(1, 1, 1), (2, 1, 1), (3, 2, 1)}


@pytest.mark.parametrize("iota", range(1, 13))
def test_wfwv_pairwise_coprime(iota):
    for w in wfwv(iota):
        assert gcd(w[0], w[1]) == gcd(w[0], w[2]) == gcd(w[1], w[2]) == 1


def test_build_toric_P_examples():
    P, forms = build_toric_P(1, 1, 1, (1, 1, 1), 1, -1)
    assert P == PLANE
    P, _ = build_toric_P(1, 1, 1, (1, 1, 1), 1, 0)
    assert P == ((1, 1, -2), (0, 1, -1))
    assert canonical_form_toric(P) == canonical_form_toric(PLANE)


def test_build_toric_P_forms_pair_to_iota_k():
    P, forms = build_toric_P(1, 1, 1, (1, 1, 1), 1, -1)
    cols = columns(P)
    for k, u in enumerate(forms):
        for j in range(3):
            if j != k:
                assert pairing(u, cols[j]) == 1


@pytest.mark.parametrize(
    "P,local,iota",
    [(PLANE, (1, 1, 1), 1), (COVER, (2, 1, 1), 2)],
)
def test_gorenstein_data(P, local, iota):
    g = gorenstein_data_toric(P)
    assert g.local == local and g.iota == iota


def test_cover_fixture():
    assert class_group_torsion(COVER) == (4,)
    assert class_group_torsion(PLANE) == ()
    assert det_pairs(COVER) == (8, 4, 4)
    assert canonical_form_toric(COVER) != canonical_form_toric(PLANE)
    rec = make_record(COVER)
    assert sorted(rec.weights) == [1, 1, 2]
    assert rec.iota == 2


def test_is_fwpp_matrix():
    assert is_fwpp_matrix(PLANE)
    assert not is_fwpp_matrix(((1, 0, 1), (0, 1, 1)))
    assert not is_fwpp_matrix(((2, 0, -1), (0, 1, -1)))


@pytest.mark.parametrize("iota,count", [(1, 5), (2, 7), (3, 18)])
def test_classify_toric_counts(iota, count):
    assert len(classify_toric(iota)) == count


def test_classify_toric_matches_box_search():
    found = toric_box_search(4, 12)
    for iota in range(1, 5):
        assert {r.canonical_key for r in classify_toric(iota)} == found[iota]


@pytest.mark.parametrize("iota", range(1, 7))
def test_records_are_sound(iota):
    recs = classify_toric(iota)
    assert [r.canonical_key for r in recs] == sorted(r.canonical_key for r in recs)
    for rec in recs:
        P = rec.matrix
        assert is_fwpp_matrix(P)
        assert rec.iota == iota
        assert toric_normal_form(P) == P
        cols = columns(P)
        for k in range(3):
            v1, v2 = (cols[j] for j in range(3) if j != k)
            u, _ = gorenstein_form_pair(v1, v2)
            assert pairing(u, v1) == pairing(u, v2) == 1


@pytest.mark.parametrize("P", [PLANE, COVER] + [r.matrix for r in classify_toric(3)])
def test_key_invariant_under_perturbation(P):
    rng = random.Random(hash(P) & 0xFFFF)
    key = canonical_form_toric(P)
    for _ in range(200):
        assert canonical_form_toric(perturb_toric(P, rng)) == key


@given(st.integers(0, 2**32))
def test_normal_form_is_idempotent(seed):
    rng = random.Random(seed)
    P = perturb_toric(COVER, rng)
    N = toric_normal_form(P)
    assert toric_normal_form(N) == N
