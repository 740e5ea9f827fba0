"""Defining data of rational K*-surfaces of Picard number one.

A surface is encoded by one of two matrix types of shape ``(r+1) x (r+2)``.

``ee``  (two elliptic fixed points)::

    [ -l01  -l02  l1            ]
    [  ...   ...      ...       ]
    [ -l01  -l02           lr   ]
    [  d01   d02  d1  ...  dr   ]

``ep``  (one elliptic fixed point and a curve of parabolic fixed points)::

    [ -l0  l1            0 ]
    [ ...      ...      ...]
    [ -l0           lr   0 ]
    [  d0  d1  ...  dr  -1 ]

Each block ``(l, d)`` is called an arm; in ``ee`` the first arm carries two
columns and is stored separately as ``lead``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Literal, Sequence

from ..exact import (
    IntMat,
    RatVec,
    checked,
    columns,
    det,
    from_columns,
    int_matrix,
    is_primitive,
    minimal_primitive_multiplier,
)

Kind = Literal["ee", "ep"]
Arm = tuple[int, int]

CASE_LABELS = ("eAeA", "eAeD", "eAeE", "eDeD", "eDeE", "eEeE", "eDp", "eEp")


class ZeroSlopeSum(ValueError):
    """The slope sum of a B-matrix vanishes, so its linear form is undefined."""


class NotATableConfiguration(ValueError):
    pass


class MalformedMatrix(ValueError):
    pass


@dataclass(frozen=True)
class KStarMatrix:
    """Combinatorial data of a K*-surface.

    Parameters
    ----------
    kind
        ``"ee"`` or ``"ep"``.
    lead
        For ``ee`` the pair ``((l01, d01), (l02, d02))``; for ``ep`` the
        single arm ``((l0, d0),)``.
    arms
        The arms ``(l_i, d_i)`` for ``i = 1..r``.
    """

    kind: Kind
    lead: tuple[Arm, ...]
    arms: tuple[Arm, ...]

    @property
    def r(self) -> int:
        return len(self.arms)

    @property
    def matrix(self) -> IntMat:
        r = self.r
        cols = []
        for l0, d0 in self.lead:
            cols.append([-l0] * r + [d0])
        for i, (li, di) in enumerate(self.arms):
            col = [0] * r + [di]
            col[i] = li
            cols.append(col)
        if self.kind == "ep":
            cols.append([0] * r + [-1])
        return from_columns(cols)

    def elliptic_tuples(self) -> list[tuple[int, ...]]:
        """Exponent tuples ``(l_0, l_1, ..., l_r)`` of the elliptic fixed points."""
        arm_ls = tuple(l for l, _ in self.arms)
        return [(l0,) + arm_ls for l0, _ in self.lead]

    def relation_degrees(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        """Exponents of the trinomial relations ``T_0^{l_0} + T_1^{l_1} + T_i^{l_i}``, ``i = 2..r``.

        The leading monomial has one exponent per lead column.
        """
        lead = tuple(l for l, _ in self.lead)
        ls = [l for l, _ in self.arms]
        return tuple((lead, (ls[0],), (ls[i],)) for i in range(1, self.r))


def ee(l01: int, d01: int, l02: int, d02: int, arms: Sequence[Arm]) -> KStarMatrix:
    return KStarMatrix("ee", ((l01, d01), (l02, d02)), tuple(tuple(a) for a in arms))  # type: ignore[misc]


def ep(l0: int, d0: int, arms: Sequence[Arm]) -> KStarMatrix:
    return KStarMatrix("ep", ((l0, d0),), tuple(tuple(a) for a in arms))  # type: ignore[misc]


def from_matrix(P: Sequence[Sequence[int]]) -> KStarMatrix:
    """Read a defining matrix of type ``ee`` or ``ep`` back into arm data.

    The two lead columns of an ``ee`` matrix are put in decreasing slope order.
    """
    P = int_matrix(P)
    n_rows = len(P)
    r = n_rows - 1
    if r < 1 or len(P[0]) != r + 2:
        raise MalformedMatrix("expected an (r+1) x (r+2) matrix")
    cols = columns(P)
    last = cols[-1]
    if all(x == 0 for x in last[:r]) and last[r] == -1:
        lead_cols, arm_cols, kind = cols[:1], cols[1:-1], "ep"
    else:
        lead_cols, arm_cols, kind = cols[:2], cols[2:], "ee"
    lead = []
    for c in lead_cols:
        if len(set(c[:r])) != 1 or c[0] >= 0:
            raise MalformedMatrix(f"lead column {c} is not of the form (-l, ..., -l, d)")
        lead.append((-c[0], c[r]))
    arms = []
    for i, c in enumerate(arm_cols):
        if any(c[j] for j in range(r) if j != i) or c[i] <= 0:
            raise MalformedMatrix(f"arm column {c} is not of the form l*e_i + d*e_last")
        arms.append((c[i], c[r]))
    if kind == "ee" and Fraction(lead[0][1], lead[0][0]) < Fraction(lead[1][1], lead[1][0]):
        lead.reverse()
    return KStarMatrix(kind, tuple(lead), tuple(arms))  # type: ignore[arg-type]


def u_B(ls: Sequence[int], ds: Sequence[int]) -> RatVec:
    """Linear form of the square matrix ``B = [v_0, v_1, ..., v_r]`` built from arms.

    It evaluates to ``1 - (r-1)*l_0`` on ``v_0`` and to ``1`` on every other
    column.  With ``m_i = d_i/l_i`` and ``m = sum(m_i)``::

        u_B = (u_1, ..., u_r, ell) / m
        u_i = (r-1) m_i + sum_{j != i} (m_j/l_i - m_i/l_j)
        ell = sum(1/l_i) - r + 1

    Raises
    ------
    ZeroSlopeSum
        If ``m = 0``.
    """
    r = len(ls) - 1
    if r < 1 or len(ds) != len(ls) or any(l <= 0 for l in ls):
        raise ValueError("need r >= 1 and positive l")
    ms = [Fraction(d, l) for l, d in zip(ls, ds)]
    m = sum(ms)
    if m == 0:
        raise ZeroSlopeSum("m = 0")
    out = []
    for i in range(1, r + 1):
        ui = (r - 1) * ms[i]
        for j in range(r + 1):
            if j != i:
                ui += ms[j] / ls[i] - ms[i] / ls[j]
        out.append(ui / m)
    ell = sum(Fraction(1, l) for l in ls) - r + 1
    out.append(ell / m)
    return tuple(out)


def slope_sums(M: KStarMatrix) -> tuple[Fraction, ...]:
    """``m = d_0/l_0 + sum d_i/l_i`` for each lead column."""
    s = sum(Fraction(d, l) for l, d in M.arms)
    return tuple(Fraction(d, l) + s for l, d in M.lead)


def is_valid(M: KStarMatrix) -> bool:
    """Structural validity of the combinatorial data.

    Arms need ``l_i >= 2`` (``ep`` also on the lead), columns must be
    primitive and pairwise distinct, and the columns must span the space
    as a cone: ``m+ > 0 > m-`` for ``ee`` and ``m > 0`` for ``ep``.
    """
    if M.r < 2:
        return False
    if any(l < 2 for l, _ in M.arms):
        return False
    if any(l < 1 for l, _ in M.lead):
        return False
    if M.kind == "ee":
        if len(M.lead) != 2:
            return False
        m_plus, m_minus = slope_sums(M)
        if not (m_plus > 0 > m_minus):
            return False
    else:
        if len(M.lead) != 1 or M.lead[0][0] < 2:
            return False
        if slope_sums(M)[0] <= 0:
            return False
    if not all(gcd(l, d) == 1 for l, d in M.lead + M.arms):
        return False
    cols = columns(M.matrix)
    return len(set(cols)) == len(cols) and all(is_primitive(c) for c in cols)


@dataclass(frozen=True)
class KStarGorData:
    """Local Gorenstein indices of the fixed points.

    For ``ee``: ``iota_plus``/``iota_minus`` belong to the two elliptic points
    and ``other`` holds the hyperbolic index.  For ``ep``: ``iota_plus`` is the
    elliptic index, ``iota_minus`` is ``None`` and ``other`` holds the
    parabolic indices ``iota_0, ..., iota_r``.
    """

    iota_plus: int
    iota_minus: int | None
    other: tuple[int, ...]
    iota: int

    @property
    def local(self) -> tuple[int, ...]:
        head = (self.iota_plus,) if self.iota_minus is None else (self.iota_plus, self.iota_minus)
        return head + self.other


def elliptic_forms(M: KStarMatrix) -> list[RatVec]:
    ls_arms = [l for l, _ in M.arms]
    ds_arms = [d for _, d in M.arms]
    return [u_B([l0] + ls_arms, [d0] + ds_arms) for l0, d0 in M.lead]


def hyperbolic_form(M: KStarMatrix) -> RatVec:
    """Form pairing to ``-1`` with both lead columns of an ``ee`` matrix."""
    (l01, d01), (l02, d02) = M.lead
    delta = l02 * d01 - l01 * d02
    zeros = [Fraction(0)] * (M.r - 1)
    return tuple([Fraction(d01 - d02, delta)] + zeros + [Fraction(l01 - l02, delta)])


def parabolic_forms(M: KStarMatrix) -> list[RatVec]:
    """Forms pairing to ``1`` with ``v_i`` and with ``v^- = -e_{r+1}``, for ``i = 0..r``.

    Only the coordinate sum over the first ``r`` slots and the last slot matter
    on ``v_i`` and ``v^-``; arm ``i >= 1`` puts its value in slot ``i``, the
    lead arm in slot ``1``.
    """
    r = M.r
    (l0, d0), = M.lead
    out = []
    u = [Fraction(0)] * (r + 1)
    u[0], u[r] = Fraction(-(1 + d0), l0), Fraction(-1)
    out.append(tuple(u))
    for i, (li, di) in enumerate(M.arms):
        u = [Fraction(0)] * (r + 1)
        u[i], u[r] = Fraction(1 + di, li), Fraction(-1)
        out.append(tuple(u))
    return out


def local_data(M: KStarMatrix) -> KStarGorData:
    """Local Gorenstein indices of all possibly singular fixed points.

    Raises
    ------
    ZeroSlopeSum
        If an elliptic form is undefined.
    """
    ell = [minimal_primitive_multiplier(u) for u in elliptic_forms(M)]
    if M.kind == "ee":
        hyp = minimal_primitive_multiplier(hyperbolic_form(M))
        return KStarGorData(ell[0], ell[1], (hyp,), lcm(ell[0], ell[1], hyp))
    par = tuple(minimal_primitive_multiplier(u) for u in parabolic_forms(M))
    return KStarGorData(ell[0], None, par, lcm(ell[0], *par))


def local_data_ee(M: KStarMatrix) -> KStarGorData:
    if M.kind != "ee":
        raise ValueError("expected an ee matrix")
    return local_data(M)


def local_data_ep(M: KStarMatrix) -> KStarGorData:
    if M.kind != "ep":
        raise ValueError("expected an ep matrix")
    return local_data(M)


def is_platonic(t: Sequence[int]) -> bool:
    """Whether ``sum(1/t_i) > len(t) - 2``."""
    if any(x <= 0 for x in t):
        raise ValueError("entries must be positive")
    return sum(Fraction(1, x) for x in t) > len(t) - 2


def is_log_terminal(M: KStarMatrix) -> bool:
    return all(is_platonic(t) for t in M.elliptic_tuples())


def point_type(t: Sequence[int]) -> str:
    """ADE letter of a platonic exponent tuple."""
    if not is_platonic(t):
        raise NotATableConfiguration(f"{tuple(t)} is not platonic")
    big = sorted((x for x in t if x > 1), reverse=True)
    if len(big) <= 2:
        return "A"
    if big[1:] == [2, 2]:
        return "D"
    return "E"


def case_label(M: KStarMatrix) -> str:
    """One of ``eAeA, eAeD, eAeE, eDeD, eDeE, eEeE, eDp, eEp``."""
    types = sorted(point_type(t) for t in M.elliptic_tuples())
    if M.kind == "ee":
        label = f"e{types[0]}e{types[1]}"
    else:
        label = f"e{types[0]}p"
    if label not in CASE_LABELS:
        raise NotATableConfiguration(label)
    return label


def is_quasi_smooth(M: KStarMatrix) -> bool:
    """Quasi-smooth at every point: ``ee`` with ``r = 2`` and both lead exponents 1."""
    return M.kind == "ee" and M.r == 2 and all(l == 1 for l, _ in M.lead)


def _reduce_arms(lead: list[Arm], arms: list[Arm]) -> tuple[list[Arm], list[Arm]]:
    # add multiples of the upper rows to the last one so that 0 <= d_i < l_i
    shift = 0
    out = []
    for l, d in arms:
        q, rem = divmod(d, l)
        shift += q
        out.append((l, rem))
    return [(l, d + shift * l) for l, d in lead], out


def normal_form(M: KStarMatrix) -> KStarMatrix:
    """Distinguished representative of the orbit under admissible operations.

    ``ee``: both orientations of the torus action are tried (negate the last row
    and swap the lead columns); in each, arms are reduced to ``0 <= d_i < l_i``
    and sorted; the lexicographically smaller result wins.

    ``ep``: all arms are reduced; the smallest reduced arm becomes the lead and
    absorbs the slope sum, the others are ordered by decreasing slope.
    """
    if M.kind == "ee":
        best = None
        for sign in (1, -1):
            lead = [(l, sign * d) for l, d in M.lead]
            if sign < 0:
                lead.reverse()
            arms = [(l, sign * d) for l, d in M.arms]
            lead, arms = _reduce_arms(lead, arms)
            cand = (tuple(lead), tuple(sorted(arms)))
            if best is None or cand < best:
                best = cand
        return KStarMatrix("ee", best[0], best[1])  # type: ignore[index]
    (l0, d0), = M.lead
    m = slope_sums(M)[0]
    reduced = sorted((l, d % l) for l, d in ((l0, d0),) + M.arms)
    head, rest = reduced[0], reduced[1:]
    rest.sort(key=lambda a: (-Fraction(a[1], a[0]), a[0]))
    tail = m - sum(Fraction(d, l) for l, d in rest)
    d_head = tail * head[0]
    assert d_head.denominator == 1
    return KStarMatrix("ep", ((head[0], int(d_head)),), tuple(rest))


def canonical_key_kstar(M: KStarMatrix) -> bytes:
    N = normal_form(M)
    body = ";".join(",".join(str(checked(x)) for x in row) for row in N.matrix)
    return f"kstar-{N.kind}|{body}".encode()


def det_B(M: KStarMatrix, which: int = 0) -> int:
    """Determinant of ``[v_0j, v_1, ..., v_r]`` for lead column ``j``."""
    cols = columns(M.matrix)
    n_lead = len(M.lead)
    return det(from_columns([cols[which]] + cols[n_lead:n_lead + M.r]))
