"""Non-quasi-smooth log terminal K*-surfaces of Picard number one.

Every family below produces a finite superset of candidate matrices; the
caller keeps those that are valid, log terminal, not quasi-smooth and of
the requested Gorenstein index.

Notation for ``ee`` data with arms ``(l_i, d_i)``: ``L = prod(l_i)``,
``sigma = sum(d_i * L / l_i)``.  The elliptic points have local class group
orders::

    k+ = L*d01 + l01*sigma > 0,        k- = -(L*d02 + l02*sigma) > 0

and the last entry of ``iota+ * u+`` equals ``iota+ * c+ / k+`` with
``c+ = L*(1 + l01*(sum(1/l_i) - r + 1))``.  Hence ``k+`` divides ``iota * c+``,
a finite set whenever ``c+`` is fixed by the exponents.  The hyperbolic
point contributes ``Delta = l02*d01 - l01*d02`` with
``Delta | iota*(d01 - d02)`` and ``Delta | iota*(l01 - l02)``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import gcd, prod

from ..exact import divisors
from .surface import ee, ep


def _coprime_residues(l: int) -> list[int]:
    return [d for d in range(1, l) if gcd(d, l) == 1]


def _c_value(l0: int, arm_ls: tuple[int, ...]) -> Fraction:
    L = prod(arm_ls)
    r = len(arm_ls)
    return L * (1 + l0 * (sum(Fraction(1, l) for l in arm_ls) - r + 1))


def fixed_exponent_candidates(iota: int, lead_ls: tuple[int, ...], arm_ls: tuple[int, ...]):
    """Candidates with every exponent fixed; only the ``d`` entries vary.

    Works for ``ee`` (two lead exponents) and ``ep`` (one).  Arms are reduced
    to ``0 < d_i < l_i``; the lead entries are then pinned by ``k``.
    """
    L = prod(arm_ls)
    ks = []
    for l0 in lead_ls:
        c = _c_value(l0, arm_ls)
        assert c.denominator == 1 and c > 0, (l0, arm_ls)
        ks.append(divisors(iota * int(c)))
    for res in product(*(_coprime_residues(l) for l in arm_ls)):
        sigma = sum(d * (L // l) for d, l in zip(res, arm_ls))
        arms = list(zip(arm_ls, res))
        if len(lead_ls) == 1:
            l0 = lead_ls[0]
            for k in ks[0]:
                if (k - l0 * sigma) % L == 0:
                    yield ep(l0, (k - l0 * sigma) // L, arms)
            continue
        l01, l02 = lead_ls
        d01s = [(k - l01 * sigma) // L for k in ks[0] if (k - l01 * sigma) % L == 0]
        d02s = [(-k - l02 * sigma) // L for k in ks[1] if (-k - l02 * sigma) % L == 0]
        for d01 in d01s:
            for d02 in d02s:
                yield ee(l01, d01, l02, d02, arms)


def free_lead_22_candidates(iota: int):
    """Arms ``(2, 2)`` with arbitrary lead exponents ``(l01, l02)``.

    With ``d1 = d2 = 1``: ``K+ = d01 + l01`` and ``K- = -d02 - l02`` divide
    ``iota``; ``Delta = l02*K+ + l01*K-`` divides ``iota*(K+ + K-)`` because
    ``(d01 - d02) + (l01 - l02) = K+ + K-``.
    """
    divs = divisors(iota)
    for kp in divs:
        for km in divs:
            g = gcd(kp, km)
            for delta in divisors(iota * (kp + km)):
                if delta % g:
                    continue
                mod = kp // g
                l01 = (delta // g) * pow(km // g, -1, mod) % mod if mod > 1 else 0
                if l01 == 0:
                    l01 = mod
                while l01 * km + kp <= delta:
                    l02, rem = divmod(delta - l01 * km, kp)
                    if rem == 0 and l02 >= 1:
                        yield ee(l01, kp - l01, l02, -km - l02, [(2, 1), (2, 1)])
                    l01 += mod


def lead22_arm_y2_candidates(iota: int):
    """Lead exponents ``(2, 2)``, arms ``(y, 2)`` with ``y >= 3``.

    ``d01 = 2s - 1``, ``d02 = -2t - 1``, ``d1 = delta``, ``d2 = 1``; then
    ``K+ = y*s + delta`` and ``K- = y*t - delta`` divide ``iota``, so
    ``y | K+ + K-``.
    """
    divs = divisors(iota)
    for kp in divs:
        for km in divs:
            for y in divisors(kp + km):
                if y < 3:
                    continue
                s, delta = divmod(kp, y)
                if delta == 0:
                    continue
                t = (km + delta) // y
                yield ee(2, 2 * s - 1, 2, -2 * t - 1, [(y, delta), (2, 1)])


def lead12_arm_y2_candidates(iota: int):
    """Lead exponents ``(1, 2)``, arms ``(y, 2)`` with ``y >= 3``.

    Normalized to ``d01 = 0`` and ``d2 = 1`` with ``d1`` free.  The
    hyperbolic index is then ``-d02`` (odd), ``K- = y*(iota_h - 1)/2 - d1``
    divides ``iota`` and ``k+ = y*iota_h - 2*K-`` divides
    ``2*iota*(iota_h + K-)``.
    """
    divs = divisors(iota)
    for ih in divs:
        if ih % 2 == 0:
            continue
        for km in divs:
            for kp in divisors(2 * iota * (ih + km)):
                y, rem = divmod(kp + 2 * km, ih)
                if rem or y < 3:
                    continue
                d1 = y * (ih - 1) // 2 - km
                yield ee(1, 0, 2, -ih, [(y, d1), (2, 1)])


def lead11_arm_y22_candidates(iota: int):
    """Lead exponents ``(1, 1)``, three arms ``(y, 2, 2)`` with ``y >= 2``.

    ``d01 = s - 1``, ``d02 = -t - 1``, ``d1 = delta``, ``d2 = d3 = 1``; then
    ``K+ = y*s + delta`` and ``K- = y*t - delta`` divide ``iota``.
    """
    divs = divisors(iota)
    for kp in divs:
        for km in divs:
            for y in divisors(kp + km):
                if y < 2:
                    continue
                s, delta = divmod(kp, y)
                if delta == 0:
                    continue
                t = (km + delta) // y
                yield ee(1, s - 1, 1, -t - 1, [(y, delta), (2, 1), (2, 1)])


def ep_y22_candidates(iota: int):
    """Parabolic type with exponents ``(y, 2, 2)``.

    ``K = d0 + y`` divides ``iota`` and the parabolic point on the lead arm has
    index ``y / gcd(y, 1 + d0)``, hence ``y | iota*(K + 1)``.
    """
    for k in divisors(iota):
        for y in divisors(iota * (k + 1)):
            if y >= 2:
                yield ep(y, k - y, [(2, 1), (2, 1)])


def fixed_exponent_table() -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """``(lead exponents, arm exponents)`` whose elliptic points have bounded ``c``.

    Lead pairs are listed with ``l01 <= l02``; reversing the torus action
    swaps them.
    """
    out = []

    def leads(bound: int, allow_11: bool):
        for a in range(1, bound + 1):
            for b in range(a, bound + 1):
                if (a, b) != (1, 1) or allow_11:
                    yield (a, b)

    out += [(lp, (3, 2)) for lp in leads(5, False)]
    for z in (4, 5):
        out += [(lp, (z, 2)) for lp in leads(3, False)]
    for z in (3, 4, 5):
        out += [(lp, (z, 3)) for lp in leads(2, False)]
    for z in (3, 4, 5):
        out.append(((1, 1), (z, 3, 2)))
    out += [((z,), (3, 2)) for z in (3, 4, 5)]
    return out


def nonqs_candidates(iota: int):
    """Superset of all non-quasi-smooth log terminal surfaces of index ``iota``."""
    for lead_ls, arm_ls in fixed_exponent_table():
        yield from fixed_exponent_candidates(iota, lead_ls, arm_ls)
    yield from free_lead_22_candidates(iota)
    yield from lead22_arm_y2_candidates(iota)
    yield from lead12_arm_y2_candidates(iota)
    yield from lead11_arm_y22_candidates(iota)
    yield from ep_y22_candidates(iota)
