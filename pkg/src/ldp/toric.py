"""Fake weighted projective planes of prescribed Gorenstein index.

A fake weighted projective plane is encoded by a ``2 x 3`` integer matrix
``P`` whose columns are the primitive ray generators of its complete fan.
Two matrices define isomorphic surfaces iff ``P' = A P S`` with ``A``
unimodular and ``S`` a permutation matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import gcd, lcm

from .exact import (
    IntMat,
    RatVec,
    checked,
    cokernel,
    columns,
    det,
    divisors,
    from_columns,
    gcd_list,
    has_positive_kernel,
    int_matrix,
    is_primitive,
    kernel_vector,
    transpose,
)
from .unitfrac import ufp2


class CollinearColumns(ValueError):
    pass


class NotUnitFractionTriple(ValueError):
    pass


@dataclass(frozen=True)
class ToricGorData:
    iota0: int
    iota1: int
    iota2: int
    iota: int

    @property
    def local(self) -> tuple[int, int, int]:
        return (self.iota0, self.iota1, self.iota2)


@dataclass(frozen=True)
class FwppRecord:
    matrix: IntMat
    weights: tuple[int, int, int]
    torsion: tuple[int, ...]
    gor: ToricGorData
    canonical_key: bytes

    @property
    def iota(self) -> int:
        return self.gor.iota

    @property
    def id(self) -> str:
        return self.canonical_key.hex()


def is_fwpp_matrix(P: IntMat) -> bool:
    """Columns primitive, pairwise distinct, and positively spanning the plane."""
    if len(P) != 2 or len(P[0]) != 3:
        return False
    cols = columns(P)
    if len(set(cols)) != 3 or not all(is_primitive(c) for c in cols):
        return False
    return has_positive_kernel(P)


def gorenstein_form_pair(v1: tuple[int, int], v2: tuple[int, int]) -> tuple[RatVec, int]:
    """Linear form pairing to 1 with both vectors, and its primitive multiplier.

    For ``v1 = (a, c)``, ``v2 = (b, d)``::

        u = ((d - c) / (ad - bc), (a - b) / (ad - bc))
        iota = |ad - bc| / gcd(d - c, a - b)
    """
    (a, c), (b, d) = v1, v2
    D = a * d - b * c
    if D == 0:
        raise CollinearColumns(f"{v1} and {v2} are collinear")
    u = (Fraction(d - c, D), Fraction(a - b, D))
    return u, abs(D) // gcd(d - c, a - b)


def g_matrix(iota: int, a0: int, a1: int, a2: int) -> IntMat:
    return int_matrix(
        [
            [iota - a0, iota, iota],
            [iota, iota - a1, iota],
            [iota, iota, iota - a2],
        ]
    )


def kernel_w(iota: int, a0: int, a1: int, a2: int) -> tuple[int, int, int]:
    """Primitive generator of the kernel of the G-matrix for a unit-fraction triple."""
    if Fraction(1, a0) + Fraction(1, a1) + Fraction(1, a2) != Fraction(1, iota):
        raise NotUnitFractionTriple(f"1/{iota} != 1/{a0} + 1/{a1} + 1/{a2}")
    w = (a1 * a2, a0 * a2, a0 * a1)
    g = gcd_list(w)
    return tuple(x // g for x in w)  # type: ignore[return-value]


def _pairwise_coprime(w) -> bool:
    return gcd(w[0], w[1]) == 1 and gcd(w[0], w[2]) == 1 and gcd(w[1], w[2]) == 1


def wfwv(iota: int) -> list[tuple[int, int, int]]:
    """Well-formed weight vectors of planes with Gorenstein index ``iota``.

    Runs ``a0`` over ``iota+1 .. 3*iota`` and ``[a1, a2]`` over the 2-term
    presentations of ``1/iota - 1/a0``; keeps pairwise coprime kernel vectors.
    Returned as descending triples, deduplicated as multisets, sorted.
    """
    if iota < 1:
        raise ValueError("iota must be positive")
    seen = set()
    for a0 in range(iota + 1, 3 * iota + 1):
        q = Fraction(1, iota) - Fraction(1, a0)
        for a1, a2 in ufp2(q):
            w = kernel_w(iota, a0, a1, a2)
            if _pairwise_coprime(w):
                seen.add(tuple(sorted(w, reverse=True)))
    return sorted(seen)


def build_toric_P(
    iota0: int, iota1: int, iota2: int, w: tuple[int, int, int], x: int, a: int
) -> tuple[IntMat, tuple[tuple[int, int], ...]] | None:
    """Candidate matrix and its three ``iota_k``-fold Gorenstein forms.

    Returns ``None`` unless all entries and forms are integral, the columns are
    primitive and pairwise distinct, and every form vector is primitive.
    """
    w0, w1, w2 = w
    S = w0 + w1 + w2
    num_b = -(w0 + w1 + a * x * w1)
    num_d = -x * iota2 * w1
    if num_b % w2 or num_d % w2:
        return None
    P = int_matrix([[1, a * x + 1, num_b // w2], [0, x * iota2, num_d // w2]])
    forms = []
    for frac_vec in (
        (Fraction(-iota0 * (w1 + w2), w0), Fraction(iota0 * (S + a * x * (w1 + w2)), x * iota2 * w0)),
        (Fraction(iota1), Fraction(-iota1 * (S + a * x * w1), x * iota2 * w1)),
        (Fraction(iota2), Fraction(-a)),
    ):
        if any(f.denominator != 1 for f in frac_vec):
            return None
        vec = (int(frac_vec[0]), int(frac_vec[1]))
        if not is_primitive(vec):
            return None
        forms.append(vec)
    cols = columns(P)
    if len(set(cols)) != 3 or not all(is_primitive(c) for c in cols):
        return None
    return P, tuple(forms)


def gorenstein_data_toric(P: IntMat) -> ToricGorData:
    cols = columns(P)
    local = []
    for k in range(3):
        v, v2 = (cols[j] for j in range(3) if j != k)
        local.append(gorenstein_form_pair(v, v2)[1])
    return ToricGorData(local[0], local[1], local[2], lcm(*local))


def _to_first_basis_vector(p: int, q: int) -> tuple[tuple[int, int], tuple[int, int]]:
    # unimodular A with A (p, q)^T = (1, 0)^T, for primitive (p, q)
    g, s, t = _ext_gcd(p, q)
    assert g == 1
    return (s, t), (-q, p)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        k, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def toric_normal_form(P: IntMat) -> IntMat:
    """Lexicographically least Hermite-like representative over the six column orders."""
    best = None
    for perm in permutations(columns(P)):
        (p, q), c1, c2 = perm
        r1, r2 = _to_first_basis_vector(p, q)
        img = [(r1[0] * c[0] + r1[1] * c[1], r2[0] * c[0] + r2[1] * c[1]) for c in perm]
        if img[1][1] < 0:
            img = [(x, -y) for x, y in img]
        alpha, gamma = img[1]
        k = -(alpha // gamma)
        img = [(x + k * y, y) for x, y in img]
        cand = tuple(tuple(checked(v) for v in row) for row in zip(*img))
        if best is None or cand < best:
            best = cand
    return best  # type: ignore[return-value]


def _serialize(M: IntMat, tag: str) -> bytes:
    body = ";".join(",".join(str(x) for x in row) for row in M)
    return f"{tag}|{body}".encode()


def canonical_form_toric(P: IntMat) -> bytes:
    """Key constant on ``P ~ A P S`` classes and separating them."""
    return _serialize(toric_normal_form(P), "toric")


def class_group_torsion(P: IntMat) -> tuple[int, ...]:
    free, torsion = cokernel(transpose(P))
    if free != 1:
        raise ValueError("class group of a fake weighted projective plane has rank 1")
    return tuple(torsion)


def make_record(P: IntMat) -> FwppRecord:
    N = toric_normal_form(P)
    w = kernel_vector(N)
    assert w is not None
    if w[0] < 0:
        w = tuple(-x for x in w)
    return FwppRecord(
        matrix=N,
        weights=w,  # type: ignore[arg-type]
        torsion=class_group_torsion(N),
        gor=gorenstein_data_toric(N),
        canonical_key=_serialize(N, "toric"),
    )


def _a_progression(w, x: int, iota2: int):
    # integers a >= ceil(-1/x), a <= iota2, with w2 | w0 + w1 + a*x*w1
    w0, w1, w2 = w
    lo = -1 if x == 1 else 0
    m = x * w1 % w2
    g = gcd(m, w2)
    target = -(w0 + w1) % w2
    if target % g:
        return range(0)
    mod = w2 // g
    if mod == 1:
        return range(lo, iota2 + 1)
    r = (target // g) * pow(m // g, -1, mod) % mod
    start = lo + (r - lo) % mod
    return range(start, iota2 + 1, mod)


def _local_index(a: int, c: int, b: int, d: int) -> int:
    return abs(a * d - b * c) // gcd(d - c, a - b)


def classify_toric_candidates(iota: int):
    """Yield every accepted candidate matrix for Gorenstein index ``iota``.

    The local index triples are not fixed in advance: ``iota2`` runs over the
    divisors of ``iota``, the divisibility condition on ``x`` is taken for the
    largest admissible ``iota1`` (namely ``iota``), and the true local indices
    are recomputed from each matrix before acceptance.

    By construction ``w`` spans the kernel of every candidate with ``w > 0``
    and the second row has no zero at columns 1 and 2, so the columns are
    automatically pairwise distinct and positively spanning; only primitivity
    and the Gorenstein index need checking.
    """
    divs = divisors(iota)
    for w in wfwv(iota):
        w0, w1, w2 = w
        S = w0 + w1 + w2
        xs = [x // w1 for x in divisors(iota * S) if x % w1 == 0]
        for iota2 in divs:
            for x in xs:
                if (x * iota2 * w1) % w2:
                    continue
                gamma = x * iota2
                delta = -gamma * w1 // w2
                for a in _a_progression(w, x, iota2):
                    if gcd(a, iota2) != 1:
                        continue
                    alpha = a * x + 1
                    beta = -(w0 + w1 + a * x * w1) // w2
                    if gcd(alpha, gamma) != 1 or gcd(beta, delta) != 1:
                        continue
                    i0 = _local_index(alpha, gamma, beta, delta)
                    if iota % i0:
                        continue
                    i1 = _local_index(1, 0, beta, delta)
                    if iota % i1:
                        continue
                    i2 = _local_index(1, 0, alpha, gamma)
                    if lcm(i0, i1, i2) == iota:
                        yield int_matrix([[1, alpha, beta], [0, gamma, delta]])


def classify_toric(iota: int) -> list[FwppRecord]:
    """One record per isomorphism class of fake weighted projective plane of index ``iota``.

    Sorted by canonical key.
    """
    if iota < 1:
        raise ValueError("iota must be positive")
    found: dict[bytes, IntMat] = {}
    for P in classify_toric_candidates(iota):
        key = canonical_form_toric(P)
        if key not in found:
            found[key] = P
    return [make_record(found[k]) for k in sorted(found)]


def det_pairs(P: IntMat) -> tuple[int, int, int]:
    """``|det|`` of the column pair complementary to each column (local class group orders)."""
    cols = columns(P)
    out = []
    for k in range(3):
        rest = [cols[j] for j in range(3) if j != k]
        out.append(abs(det(from_columns(rest))))
    return tuple(out)  # type: ignore[return-value]
