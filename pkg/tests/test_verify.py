from __future__ import annotations

import dataclasses
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from ldp.exact import from_columns, solve_pairing_system
from ldp.kstar import classify_kstar, from_matrix, u_B
from ldp.kstar import make_record as make_kstar_record
from ldp.kstar.qs import build_qs_matrix, gamma_forms
from ldp.toric import classify_toric, gorenstein_form_pair
from ldp.toric import make_record as make_toric_record
from ldp.verify import VerifyReport, verify_kstar, verify_toric

COVER = ((1, 1, -3), (0, 4, -4))
PLANE = ((1, 0, -1), (0, 1, -1))
E6_CUBIC = [[-3, -1, 3, 0], [-3, -1, 0, 2], [-2, -1, 1, 1]]
P5 = [[-6, -1, 5, 0], [-6, -1, 0, 2], [-7, -1, 3, 1]]


def check(report: VerifyReport, name: str):
    return next(c for c in report.checks if c[0] == name)


def test_report_overall_is_conjunction():
    r = VerifyReport("x")
    assert r.overall
    r.add("a", 1, 1)
    assert r.overall
    r.add("b", 1, 2)
    assert not r.overall and len(r.failures()) == 1


def test_cover_record_passes():
    rep = verify_toric(make_toric_record(COVER))
    assert rep.overall, rep.failures()
    orders = sorted(check(rep, f"local class group order {k}")[2] for k in range(3))
    assert orders == [4, 4, 8]
    assert check(rep, "class group torsion")[2] == (4,)
    assert check(rep, "iota")[2] == 2


def test_plane_record_passes():
    rec = make_toric_record(PLANE)
    rep = verify_toric(rec)
    assert rep.overall
    assert rec.gor.local == (1, 1, 1) and rec.iota == 1


def test_tampered_toric_iota_fails():
    rec = make_toric_record(COVER)
    bad = dataclasses.replace(rec, gor=dataclasses.replace(rec.gor, iota=3))
    rep = verify_toric(bad)
    assert not rep.overall
    name, ok, expected, actual = check(rep, "iota")
    assert (ok, expected, actual) == (False, 2, 3)


def test_tampered_toric_torsion_fails():
    rec = make_toric_record(COVER)
    rep = verify_toric(dataclasses.replace(rec, torsion=(2,)))
    assert [c[0] for c in rep.failures()] == ["class group torsion"]


def test_e6_cubic_passes():
    rec = make_kstar_record(from_matrix(E6_CUBIC))
    rep = verify_kstar(rec)
    assert rep.overall, rep.failures()
    assert rec.iota == 1


def test_p5_record():
    rec = make_kstar_record(from_matrix(P5))
    assert rec.iota == 2 and not rec.log_terminal
    assert verify_kstar(rec).overall


def test_qs_fixture_passes_with_gammas():
    M, gp, gm = build_qs_matrix(5, -1, 1, 1, 3, 2, 1)
    rec = make_kstar_record(M)
    assert verify_kstar(rec).overall
    up, um = gamma_forms(M, 1, 1)
    assert (up, um) == (gp, gm)


@pytest.mark.parametrize("field,value", [("quasi_smooth", True), ("log_terminal", False), ("case", "eDeD")])
def test_tampered_kstar_flags_fail(field, value):
    rec = make_kstar_record(from_matrix(E6_CUBIC))
    rep = verify_kstar(dataclasses.replace(rec, **{field: value}))
    assert not rep.overall


def test_tampered_kstar_local_index_fails():
    rec = make_kstar_record(from_matrix(E6_CUBIC))
    bad = dataclasses.replace(rec, gor=dataclasses.replace(rec.gor, iota_plus=2))
    names = [c[0] for c in verify_kstar(bad).failures()]
    assert "elliptic index 0" in names


@pytest.mark.parametrize("iota", range(1, 5))
def test_every_low_index_record_passes(iota):
    for rec in classify_toric(iota):
        assert verify_toric(rec).overall
    for rec in classify_kstar(iota):
        assert verify_kstar(rec).overall


pair = st.tuples(st.integers(-20, 20), st.integers(-20, 20))


@settings(max_examples=500)
@given(pair, pair)
def test_toric_closed_form_matches_linear_system(v1, v2):
    assume(v1[0] * v2[1] - v1[1] * v2[0] != 0)
    u, _ = gorenstein_form_pair(v1, v2)
    assert u == solve_pairing_system(from_columns([v1, v2]), [1, 1])


@settings(max_examples=500)
@given(
    st.integers(2, 3).flatmap(
        lambda r: st.tuples(
            st.lists(st.integers(1, 9), min_size=r + 1, max_size=r + 1),
            st.lists(st.integers(-15, 15), min_size=r + 1, max_size=r + 1),
        )
    )
)
def test_u_B_matches_linear_system(data):
    ls, ds = data
    r = len(ls) - 1
    assume(sum(Fraction(d, l) for l, d in zip(ls, ds)) != 0)
    cols = [[-ls[0]] * r + [ds[0]]]
    for i in range(1, r + 1):
        c = [0] * r + [ds[i]]
        c[i - 1] = ls[i]
        cols.append(c)
    targets = [1 - (r - 1) * ls[0]] + [1] * r
    assert u_B(ls, ds) == solve_pairing_system(from_columns(cols), targets)
