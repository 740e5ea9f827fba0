from __future__ import annotations

from fractions import Fraction
from math import prod

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from ldp.exact import (
    ArithmeticOverflow,
    NoPrimitiveMultiple,
    SingularSystem,
    checked,
    cokernel,
    det,
    divisors,
    from_columns,
    gcd_list,
    int_matrix,
    is_primitive,
    kernel_vector,
    minimal_primitive_multiplier,
    pairing,
    smith_normal_form,
    solve_pairing_system,
    transpose,
)

small = st.integers(-30, 30)


@pytest.mark.parametrize("v,g", [([18, 12, 6], 6), ([0, 0], 0), ([4, -6], 2)])
def test_gcd_list(v, g):
    assert gcd_list(v) == g


@pytest.mark.parametrize("v,ok", [((1, 0), True), ((2, 4), False), ((-3, -4), True)])
def test_is_primitive(v, ok):
    assert is_primitive(v) is ok


@pytest.mark.parametrize(
    "M,d",
    [
        ([[1, 0], [0, 1]], 1),
        ([[1, 1], [0, 4]], 4),
        ([[-1, 3, 0], [-1, 0, 2], [0, 1, 1]], 5),
    ],
)
def test_det(M, d):
    assert det(int_matrix(M)) == d


def test_checked_rejects_wide_integers():
    assert checked(2**63 - 1) == 2**63 - 1
    with pytest.raises(ArithmeticOverflow):
        checked(2**63)
    with pytest.raises(ArithmeticOverflow):
        int_matrix([[1, -(2**63) - 1]])


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]


@pytest.mark.parametrize(
    "M,free,torsion",
    [
        (transpose(((1, 1, -3), (0, 4, -4))), 1, [4]),
        (transpose(((1, 0, -1), (0, 1, -1))), 1, []),
        (((0, 0), (0, 0)), 2, []),
    ],
)
def test_cokernel(M, free, torsion):
    assert cokernel(int_matrix(M)) == (free, torsion)


@pytest.mark.parametrize("u,L", [((1, Fraction(1, 2)), 2), ((Fraction(1, 3), Fraction(1, 6)), 6)])
def test_minimal_primitive_multiplier(u, L):
    assert minimal_primitive_multiplier(u) == L


def test_minimal_primitive_multiplier_rejects_imprimitive():
    with pytest.raises(NoPrimitiveMultiple):
        minimal_primitive_multiplier((Fraction(2, 3), Fraction(2, 3)))


@pytest.mark.parametrize(
    "cols,u",
    [
        ([(1, 0), (0, 1)], (1, 1)),
        ([(1, 0), (1, 4)], (1, 0)),
        ([(1, 4), (-3, -4)], (-1, Fraction(1, 2))),
    ],
)
def test_solve_pairing_system(cols, u):
    assert solve_pairing_system(from_columns(cols), [1, 1]) == u


def test_solve_pairing_system_singular():
    with pytest.raises(SingularSystem):
        solve_pairing_system(from_columns([(1, 2), (2, 4)]), [1, 1])


@given(st.integers(2, 4).flatmap(lambda n: st.tuples(
    st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(st.integers(-5, 5), min_size=n, max_size=n),
)))
def test_solution_pairs_to_targets(data):
    rows, targets = data
    B = int_matrix(rows)
    assume(det(B) != 0)
    u = solve_pairing_system(B, targets)
    for j, col in enumerate(zip(*B)):
        assert pairing(u, col) == targets[j]


@given(st.lists(st.builds(Fraction, st.integers(-40, 40), st.integers(1, 12)), min_size=1, max_size=4))
def test_minimal_multiplier_is_minimal(u):
    assume(any(u))
    try:
        L = minimal_primitive_multiplier(u)
    except NoPrimitiveMultiple:
        L0 = next(k for k in range(1, 10**6) if all((k * x).denominator == 1 for x in u))
        assert gcd_list(int(L0 * x) for x in u) > 1
        return
    scaled = [L * x for x in u]
    assert all(x.denominator == 1 for x in scaled)
    assert is_primitive([int(x) for x in scaled])
    for k in range(1, L):
        assert any((k * x).denominator != 1 for x in u)


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_smith_divisibility_chain_and_order(rows):
    M = int_matrix(rows)
    diag = smith_normal_form(M)
    nz = [d for d in diag if d]
    assert all(d > 0 for d in nz)
    for a, b in zip(nz, nz[1:]):
        assert b % a == 0
    if det(M) != 0:
        assert prod(nz) == abs(det(M))


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=2, max_size=2))
def test_kernel_vector_is_in_kernel(rows):
    M = int_matrix(rows)
    w = kernel_vector(M)
    if w is None:
        return
    assert is_primitive(w)
    for row in M:
        assert sum(a * b for a, b in zip(row, w)) == 0
