"""Exact integer/rational arithmetic and small lattice linear algebra.

Matrices are plain tuples of row tuples of ``int``; rational vectors are
tuples of :class:`fractions.Fraction`.  Every integer that leaves this module
through a matrix constructor, determinant or normal form is range-checked
against signed 64-bit width, so an out-of-range candidate fails loudly
instead of being silently promoted.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

IntMat = tuple[tuple[int, ...], ...]
RatVec = tuple[Fraction, ...]

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)


class ArithmeticOverflow(OverflowError):
    """An intermediate integer left the signed 64-bit range."""


class SingularSystem(ValueError):
    pass


class NoPrimitiveMultiple(ValueError):
    pass


def checked(x: int) -> int:
    if x > INT64_MAX or x < INT64_MIN:
        raise ArithmeticOverflow(f"integer {x} exceeds 64-bit range")
    return x


def int_matrix(rows: Iterable[Iterable[int]]) -> IntMat:
    """Build an :data:`IntMat`, validating shape and entry range."""
    mat = tuple(tuple(checked(int(x)) for x in row) for row in rows)
    if mat and len({len(r) for r in mat}) != 1:
        raise ValueError("ragged matrix")
    return mat


def shape(M: IntMat) -> tuple[int, int]:
    return len(M), (len(M[0]) if M else 0)


def transpose(M: IntMat) -> IntMat:
    return tuple(zip(*M)) if M else ()


def column(M: IntMat, j: int) -> tuple[int, ...]:
    return tuple(row[j] for row in M)


def columns(M: IntMat) -> list[tuple[int, ...]]:
    return [column(M, j) for j in range(shape(M)[1])]


def from_columns(cols: Sequence[Sequence[int]]) -> IntMat:
    return int_matrix(zip(*cols))


def gcd_list(v: Iterable[int]) -> int:
    """Non-negative gcd of the entries; the gcd of all zeros is 0."""
    return reduce(gcd, (abs(int(x)) for x in v), 0)


def lcm_list(v: Iterable[int]) -> int:
    return reduce(lcm, v, 1)


def is_primitive(v: Sequence[int]) -> bool:
    return gcd_list(v) == 1


def divisors(n: int) -> list[int]:
    """Positive divisors of ``|n|`` in ascending order (``n != 0``)."""
    n = abs(n)
    if n == 0:
        raise ValueError("divisors of 0 are unbounded")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def pairing(u: Sequence, v: Sequence) -> Fraction | int:
    return sum(a * b for a, b in zip(u, v))


def det(M: IntMat) -> int:
    """Exact determinant of a square matrix of size at most 4 (cofactor expansion)."""
    n, m = shape(M)
    if n != m:
        raise ValueError("determinant of a non-square matrix")
    if n > 4:
        raise ValueError("det is restricted to size <= 4")
    return checked(_cofactor_det(M))


def _cofactor_det(M: Sequence[Sequence[int]]) -> int:
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    total = 0
    for j, a in enumerate(M[0]):
        if a:
            minor = [row[:j] + row[j + 1:] for row in M[1:]]
            total += (-1) ** j * a * _cofactor_det(minor)
    return total


def smith_normal_form(M: IntMat) -> list[int]:
    """Invariant factors ``d_1 | d_2 | ...`` of an integer matrix.

    Row and column reduction pivoting on the entry of smallest non-zero
    absolute value.  The returned list has ``min(rows, cols)`` entries;
    trailing zeros mark rank deficiency.  Transforms are not tracked.
    """
    A = [list(row) for row in M]
    n_rows, n_cols = shape(M)
    diag: list[int] = []
    for t in range(min(n_rows, n_cols)):
        while True:
            pivot = None
            for i in range(t, n_rows):
                for j in range(t, n_cols):
                    if A[i][j] and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                diag.extend([0] * (min(n_rows, n_cols) - t))
                return _fix_divisibility(diag)
            pi, pj = pivot
            A[t], A[pi] = A[pi], A[t]
            for row in A:
                row[t], row[pj] = row[pj], row[t]
            p = A[t][t]
            clean = True
            for i in range(t + 1, n_rows):
                q = A[i][t] // p
                if q:
                    A[i] = [checked(x - q * y) for x, y in zip(A[i], A[t])]
                clean &= A[i][t] == 0
            for j in range(t + 1, n_cols):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] = checked(row[j] - q * row[t])
                clean &= A[t][j] == 0
            if not clean:
                continue
            # a pivot not dividing the rest of the block is mixed back in
            bad = next(
                (i for i in range(t + 1, n_rows) for j in range(t + 1, n_cols) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            A[t] = [checked(x + y) for x, y in zip(A[t], A[bad])]
        diag.append(abs(A[t][t]))
    return _fix_divisibility(diag)


def _fix_divisibility(diag: list[int]) -> list[int]:
    # zeros go last; the non-zero part already forms a divisor chain
    nz = [d for d in diag if d]
    return nz + [0] * (len(diag) - len(nz))


def cokernel(M: IntMat) -> tuple[int, list[int]]:
    """Structure of ``Z^rows / M Z^cols`` as ``(free rank, torsion factors > 1)``."""
    n_rows, _ = shape(M)
    diag = smith_normal_form(M)
    rank = sum(1 for d in diag if d)
    return n_rows - rank, [d for d in diag if d > 1]


def minimal_primitive_multiplier(u: Sequence[Fraction]) -> int:
    """Smallest positive ``L`` with ``L*u`` integral, provided ``L*u`` is primitive.

    Raises :class:`NoPrimitiveMultiple` when the integral multiple is not
    primitive, i.e. no multiple of ``u`` at all is a primitive lattice vector.
    """
    fr = [Fraction(x) for x in u]
    if not any(fr):
        raise ValueError("zero vector has no primitive multiple")
    L = lcm_list(x.denominator for x in fr)
    if gcd_list(int(x * L) for x in fr) != 1:
        raise NoPrimitiveMultiple(f"no primitive multiple of {tuple(fr)}")
    return L


def solve_pairing_system(B: IntMat, targets: Sequence[int | Fraction]) -> RatVec:
    """The unique rational ``u`` with ``<u, B[:, j]> = targets[j]`` for all ``j``.

    Solves ``B^T u = t`` by Gauss-Jordan elimination over the rationals.
    """
    n, m = shape(B)
    if n != m or len(targets) != n:
        raise ValueError("B must be square and match the number of targets")
    aug = [[Fraction(x) for x in row] + [Fraction(t)] for row, t in zip(transpose(B), targets)]
    for c in range(n):
        p = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if p is None:
            raise SingularSystem("singular system")
        aug[c], aug[p] = aug[p], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return tuple(row[n] for row in aug)


def kernel_vector(M: IntMat) -> tuple[int, ...] | None:
    """Primitive integral generator of a one-dimensional kernel, else ``None``.

    Used for ``n x (n+1)`` matrices of full rank, where the kernel is spanned
    by the signed maximal minors.
    """
    n, m = shape(M)
    if m != n + 1:
        raise ValueError("expected an n x (n+1) matrix")
    cols = columns(M)
    w = []
    for j in range(m):
        minor = from_columns(cols[:j] + cols[j + 1:])
        w.append((-1) ** j * det(minor))
    g = gcd_list(w)
    if g == 0:
        return None
    return tuple(x // g for x in w)


def has_positive_kernel(M: IntMat) -> bool:
    """Whether the columns of an ``n x (n+1)`` matrix positively span ``Q^n``."""
    w = kernel_vector(M)
    if w is None:
        return False
    return all(x > 0 for x in w) or all(x < 0 for x in w)
