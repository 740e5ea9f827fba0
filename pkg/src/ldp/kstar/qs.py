"""Quasi-smooth K*-surfaces of Picard number one (case eAeA)."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from ..exact import divisors, is_primitive
from ..unitfrac import qs_pairs
from .surface import KStarMatrix, canonical_key_kstar, ee, is_valid, local_data, u_B


def build_qs_matrix(
    a: int, b: int, iota_plus: int, iota_minus: int, l1: int, l2: int, d2: int
) -> tuple[KStarMatrix, tuple[int, ...], tuple[int, ...]] | None:
    """Quasi-smooth defining matrix from its local class group data.

    Realizes::

        [ -1  -1                        l1                 0  ]
        [ -1  -1                        0                  l2 ]
        [  0  -(a i+ - b i-)/(l1 l2)    (a i+ - l1 d2)/l2  d2 ]

    together with the integral forms ``gamma_plus``/``gamma_minus`` that
    represent ``iota_plus``/``iota_minus`` times the anticanonical form at the
    two elliptic points.  Returns ``None`` if any entry or form fails to be
    integral, a column is not primitive, columns coincide, a form is not
    primitive, or the recomputed local indices disagree.
    """
    if a <= 0 or b >= 0 or l1 < 2 or l2 < 2 or not 0 < d2 < l2:
        return None
    ip, im = iota_plus, iota_minus
    num02 = -(a * ip - b * im)
    num1 = a * ip - l1 * d2
    if num02 % (l1 * l2) or num1 % l2:
        return None
    d1 = num1 // l2
    # the slope sums are a*ip/(l1*l2) > 0 and b*im/(l1*l2) < 0 automatically,
    # so validity comes down to coprime arm entries
    if gcd(l1, d1) != 1 or gcd(l2, d2) != 1:
        return None
    s = l1 + l2
    p12 = -(a * ip - s * d2)
    m1 = -(a * ip * s - b * im * l2 - l1 * s * d2)
    m2 = b * im - s * d2
    if s % a or s % b or p12 % (a * l2) or m1 % (b * l1 * l2) or m2 % (b * l2):
        return None
    g_plus = (p12 // (a * l2), p12 // (a * l2), s // a)
    g_minus = (m1 // (b * l1 * l2), m2 // (b * l2), s // b)
    if not (is_primitive(g_plus) and is_primitive(g_minus)):
        return None
    M = ee(1, 0, 1, num02 // (l1 * l2), [(l1, d1), (l2, d2)])
    if not is_valid(M):
        return None
    gor = local_data(M)
    if (gor.iota_plus, gor.iota_minus, gor.other) != (ip, im, (1,)):
        return None
    return M, g_plus, g_minus


def gamma_forms(M: KStarMatrix, iota_plus: int, iota_minus: int) -> tuple[tuple[Fraction, ...], ...]:
    """``iota_plus * u+`` and ``iota_minus * u-`` computed from the arm data."""
    ls = [l for l, _ in M.arms]
    ds = [d for _, d in M.arms]
    (l01, d01), (l02, d02) = M.lead
    up = u_B([l01] + ls, [d01] + ds)
    um = u_B([l02] + ls, [d02] + ds)
    return tuple(iota_plus * x for x in up), tuple(iota_minus * x for x in um)


def _d2_candidates(l1: int, l2: int, rhs: int):
    # 0 < d2 < l2 with l1*d2 = rhs (mod l2)
    g = gcd(l1, l2)
    if rhs % g:
        return
    mod = l2 // g
    base = (rhs // g) * pow(l1 // g, -1, mod) % mod if mod > 1 else 0
    for d2 in range(base, l2, mod):
        if d2 > 0:
            yield d2


def qs_candidates(iota: int):
    """Every successful :func:`build_qs_matrix` output for Gorenstein index ``iota``."""
    divs = divisors(iota)
    iota_pairs = [(p, m) for p in divs for m in divs if lcm(p, m) == iota]
    for pair in qs_pairs(iota):
        l1, l2 = pair.l1, pair.l2
        s = l1 + l2
        ds = divisors(s)
        for ip, im in iota_pairs:
            for a in ds:
                for b_abs in ds:
                    b = -b_abs
                    if (a * ip - b * im) % (l1 * l2):
                        continue
                    for d2 in _d2_candidates(l1, l2, a * ip):
                        built = build_qs_matrix(a, b, ip, im, l1, l2, d2)
                        if built is not None:
                            yield built[0]


def classify_qs(iota: int) -> list[KStarMatrix]:
    """Quasi-smooth surfaces of Gorenstein index ``iota``, one normal-form matrix per class.

    Sorted by canonical key.
    """
    if iota < 1:
        raise ValueError("iota must be positive")
    found: dict[bytes, KStarMatrix] = {}
    for M in qs_candidates(iota):
        found.setdefault(canonical_key_kstar(M), M)
    return [found[k] for k in sorted(found)]
