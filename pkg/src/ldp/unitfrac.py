"""Unit-fraction presentations (UFPs) of positive rationals.

A UFP of length ``n`` of ``q`` is a non-decreasing tuple ``(b_1, ..., b_n)``
of positive integers with ``1/b_1 + ... + 1/b_n = q``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import divisors


@dataclass(frozen=True)
class QsPair:
    """A pair ``2 <= l1 <= l2`` with witnesses ``(a1 <= a2)`` solving
    ``1/iota = (1/a1 + 1/a2) * (1/l1 + 1/l2)``."""

    l1: int
    l2: int
    witnesses: tuple[tuple[int, int], ...] = field(default=(), compare=False)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def ufp2(q: Fraction | int) -> list[tuple[int, int]]:
    """All ``a0 <= a1`` with ``1/a0 + 1/a1 = q``, ascending in ``a0``.

    Scans ``1/q < a0 <= 2/q`` and keeps ``a0`` whenever
    ``a1 = a0*den / (a0*num - den)`` is a positive integer.

    >>> ufp2(Fraction(1, 2))
    [(3, 6), (4, 4)]
    """
    q = Fraction(q)
    if q <= 0:
        raise ValueError("q must be positive")
    num, den = q.numerator, q.denominator
    out = []
    for a0 in range(den // num + 1, (2 * den) // num + 1):
        rem = a0 * num - den
        if rem > 0 and (a0 * den) % rem == 0:
            out.append((a0, (a0 * den) // rem))
    return out


def _ufp2_from(q: Fraction, lo: int) -> list[tuple[int, int]]:
    # (num*b - den)(num*c - den) = den^2: divisor form, no scan over b
    num, den = q.numerator, q.denominator
    sq = den * den
    out = []
    for e in divisors(sq):
        if e * e > sq:
            break
        f = sq // e
        if (e + den) % num == 0 and (f + den) % num == 0:
            b, c = (e + den) // num, (f + den) // num
            if b >= lo:
                out.append((b, c))
    return out


def ufp_fixed_length(q: Fraction | int, n: int) -> list[tuple[int, ...]]:
    """All non-decreasing ``n``-tuples of positive integers whose reciprocals sum to ``q``.

    Recursive; the ``k``-th entry ranges over
    ``[max(b_{k-1}, ceil(1/rem)), floor((n-k+1)/rem)]``.  The last two entries
    are produced from the divisors of ``den(rem)**2``.
    """
    q = Fraction(q)
    if q <= 0 or n < 1:
        raise ValueError("need q > 0 and n >= 1")
    return sorted(_ufp(q, n, 1))


def _ufp(q: Fraction, n: int, lo: int):
    if n == 1:
        if q.numerator == 1 and q.denominator >= lo:
            yield (q.denominator,)
        return
    if n == 2:
        yield from _ufp2_from(q, lo)
        return
    start = max(lo, _ceil_div(q.denominator, q.numerator))
    end = (n * q.denominator) // q.numerator
    for b in range(start, end + 1):
        rem = q - Fraction(1, b)
        if rem > 0:
            for tail in _ufp(rem, n - 1, b):
                yield (b,) + tail


def qs_pairs(iota: int) -> list[QsPair]:
    """Pairs ``(l1, l2)`` fitting ``1/iota = 1/(a1 l1) + 1/(a2 l1) + 1/(a1 l2) + 1/(a2 l2)``.

    With ``a1 <= a2`` and ``l1 <= l2`` the smallest denominator is
    ``q = a1*l1`` and ``iota < q <= 4*iota``.  For fixed ``a1, l1`` put
    ``c = q - iota``; the identity becomes
    ``(c*a2 - iota*a1) * (c*l2 - iota*l1) = iota * q**2``, so the remaining
    unknowns come from the divisors of ``iota * q**2``.
    """
    if iota < 1:
        raise ValueError("iota must be positive")
    found: dict[tuple[int, int], set[tuple[int, int]]] = {}
    for q in range(iota + 1, 4 * iota + 1):
        c = q - iota
        rhs = iota * q * q
        rhs_divs = None
        for l1 in divisors(q):
            if l1 < 2:
                continue
            a1 = q // l1
            if rhs_divs is None:
                rhs_divs = divisors(rhs)
            for e in rhs_divs:
                x_num, y_num = e + iota * a1, rhs // e + iota * l1
                if x_num % c or y_num % c:
                    continue
                a2, l2 = x_num // c, y_num // c
                if a2 >= a1 and l2 >= l1:
                    found.setdefault((l1, l2), set()).add((a1, a2))
    return [QsPair(l1, l2, tuple(sorted(w))) for (l1, l2), w in sorted(found.items())]


def qs_pairs_from_quadruples(iota: int) -> list[QsPair]:
    """Same pairs as :func:`qs_pairs`, obtained by factoring every length-4 UFP of ``1/iota``.

    Much slower; kept as an independent route for cross-checking.
    """
    found: dict[tuple[int, int], set[tuple[int, int]]] = {}
    for quad in ufp_fixed_length(Fraction(1, iota), 4):
        q1, q2, q3, q4 = quad
        if q1 * q4 != q2 * q3:
            continue
        for l1 in divisors(q1):
            if l1 < 2:
                continue
            a1 = q1 // l1
            for mid in {q2, q3}:
                other = q2 + q3 - mid
                if mid % l1 or other % a1:
                    continue
                a2, l2 = mid // l1, other // a1
                if a2 >= a1 and l2 >= l1 and a2 * l2 == q4:
                    found.setdefault((l1, l2), set()).add((a1, a2))
    return [QsPair(l1, l2, tuple(sorted(w))) for (l1, l2), w in sorted(found.items())]


def is_qs_witness(iota: int, l1: int, l2: int, a1: int, a2: int) -> bool:
    return Fraction(1, a1 * l1) + Fraction(1, a2 * l1) + Fraction(1, a1 * l2) + Fraction(1, a2 * l2) == Fraction(1, iota)


__all__ = [
    "QsPair",
    "ufp2",
    "ufp_fixed_length",
    "qs_pairs",
    "qs_pairs_from_quadruples",
    "is_qs_witness",
]
