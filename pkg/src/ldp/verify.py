"""Independent re-derivation of the claims stored on a classification record.

The checks here solve the defining linear systems of the Gorenstein forms
directly and compare the result with the closed formulas used by the
classifiers, so a bug in either path shows up as a failed check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm, prod
from typing import Any, Callable

from .exact import (
    cokernel,
    columns,
    det,
    from_columns,
    has_positive_kernel,
    is_primitive,
    kernel_vector,
    minimal_primitive_multiplier,
    solve_pairing_system,
    transpose,
)
from .kstar import KStarRecord
from .kstar.surface import (
    canonical_key_kstar,
    elliptic_forms,
    hyperbolic_form,
    is_valid,
    parabolic_forms,
)
from .toric import FwppRecord, canonical_form_toric, gorenstein_form_pair


@dataclass
class VerifyReport:
    """Outcome of re-checking one record.

    ``checks`` holds ``(name, ok, expected, actual)`` tuples; ``expected`` is
    the independently recomputed value and ``actual`` the stored one.
    """

    subject: str
    checks: list[tuple[str, bool, Any, Any]] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(ok for _, ok, _, _ in self.checks)

    def failures(self) -> list[tuple[str, bool, Any, Any]]:
        return [c for c in self.checks if not c[1]]

    def add(self, name: str, expected: Any, actual: Any) -> None:
        self.checks.append((name, expected == actual, expected, actual))

    def run(self, name: str, compute: Callable[[], Any], actual: Any) -> Any:
        """Record ``compute() == actual``; an exception counts as a failure."""
        try:
            expected = compute()
        except Exception as exc:  # noqa: BLE001 - any failure is a report entry
            self.checks.append((name, False, f"error: {type(exc).__name__}: {exc}", actual))
            return None
        self.add(name, expected, actual)
        return expected


def _snf_order(cols: list[tuple[int, ...]]) -> int:
    free, torsion = cokernel(from_columns(cols))
    if free:
        return 0
    return prod(torsion)


def verify_toric(rec: FwppRecord) -> VerifyReport:
    report = VerifyReport(rec.id)
    P = rec.matrix
    cols = columns(P)
    report.add("shape", (2, 3), (len(P), len(P[0]) if P else 0))
    if report.failures():
        return report
    report.add("columns primitive", True, all(is_primitive(c) for c in cols))
    report.add("columns distinct", 3, len(set(cols)))
    report.add("positive kernel", True, has_positive_kernel(P))

    def weights():
        w = kernel_vector(P)
        return tuple(abs(x) for x in w)

    report.run("weights", weights, tuple(rec.weights))

    locals_ = []
    for k in range(3):
        pair = [cols[j] for j in range(3) if j != k]
        report.run(
            f"local class group order {k}",
            lambda: _snf_order(pair),
            abs(det(from_columns(pair))),
        )
        u = report.run(
            f"gorenstein form {k}",
            lambda: solve_pairing_system(from_columns(pair), [1, 1]),
            gorenstein_form_pair(pair[0], pair[1])[0],
        )
        local = report.run(
            f"local index {k}",
            lambda: minimal_primitive_multiplier(u),
            rec.gor.local[k],
        )
        locals_.append(local)

    report.run("class group torsion", lambda: tuple(cokernel(transpose(P))[1]), tuple(rec.torsion))
    report.run("class group rank", lambda: cokernel(transpose(P))[0], 1)
    report.run("iota", lambda: lcm(*locals_), rec.iota)
    report.run("canonical key", lambda: canonical_form_toric(P), rec.canonical_key)
    return report


def _is_platonic_direct(t: tuple[int, ...]) -> bool:
    # sum(1/t_i) > len(t) - 2, cleared of denominators
    L = prod(t)
    return sum(L // x for x in t) > (len(t) - 2) * L


def _ade(t: tuple[int, ...]) -> str:
    big = sorted((x for x in t if x != 1), reverse=True)
    if len(big) <= 2:
        return "A"
    if len(big) == 3 and big[1] == big[2] == 2:
        return "D"
    if len(big) == 3 and big[1:] == [3, 2] and big[0] in (3, 4, 5):
        return "E"
    return "?"


def _case_direct(kind: str, tuples: list[tuple[int, ...]]) -> str:
    letters = sorted(_ade(t) for t in tuples)
    if kind == "ee":
        return f"e{letters[0]}e{letters[1]}"
    return f"e{letters[0]}p"


def _project(v: tuple[int, ...], slot: int) -> tuple[int, int]:
    return (v[slot], v[-1])


def verify_kstar(rec: KStarRecord) -> VerifyReport:
    report = VerifyReport(rec.id)
    M = rec.matrix
    r = M.r
    P = M.matrix
    cols = columns(P)
    n_lead = len(M.lead)
    report.add("valid defining data", True, is_valid(M))
    report.add("columns primitive", True, all(is_primitive(c) for c in cols))
    report.add("columns distinct", len(cols), len(set(cols)))

    arm_cols = cols[n_lead:n_lead + r]
    tuples = [(l0,) + tuple(l for l, _ in M.arms) for l0, _ in M.lead]
    ell_closed = None
    try:
        ell_closed = elliptic_forms(M)
    except Exception as exc:  # noqa: BLE001
        report.checks.append(("elliptic forms defined", False, "defined", f"{type(exc).__name__}"))

    elliptic_idx = []
    for j in range(n_lead):
        l0 = M.lead[j][0]
        B = from_columns([cols[j]] + arm_cols)
        targets = [1 - (r - 1) * l0] + [1] * r
        u = report.run(
            f"elliptic form {j}",
            lambda: solve_pairing_system(B, targets),
            tuple(ell_closed[j]) if ell_closed else None,
        )
        elliptic_idx.append(report.run(f"elliptic index {j}", lambda: minimal_primitive_multiplier(u), rec.gor.local[j]))

    if M.kind == "ee":
        pair = [_project(cols[0], 0), _project(cols[1], 0)]

        def hyp():
            h = solve_pairing_system(from_columns(pair), [-1, -1])
            return (h[0],) + (Fraction(0),) * (r - 1) + (h[1],)

        u = report.run("hyperbolic form", hyp, tuple(hyperbolic_form(M)))
        other = [report.run("hyperbolic index", lambda: minimal_primitive_multiplier(u), rec.gor.other[0] if rec.gor.other else None)]
    else:
        closed = parabolic_forms(M)
        other = []
        v_minus = (0, -1)
        for i in range(r + 1):
            slot = 0 if i == 0 else i - 1
            col = cols[0] if i == 0 else arm_cols[i - 1]

            def par(col=col, slot=slot):
                s = solve_pairing_system(from_columns([_project(col, slot), v_minus]), [1, 1])
                u = [Fraction(0)] * (r + 1)
                u[slot], u[r] = s
                return tuple(u)

            u = report.run(f"parabolic form {i}", par, tuple(closed[i]))
            stored = rec.gor.other[i] if i < len(rec.gor.other) else None
            other.append(report.run(f"parabolic index {i}", lambda: minimal_primitive_multiplier(u), stored))

    report.run("local indices", lambda: tuple(elliptic_idx) + tuple(other), tuple(rec.gor.local))
    report.run("iota", lambda: lcm(*elliptic_idx, *other), rec.iota)
    report.add("quasi-smooth", M.kind == "ee" and r == 2 and all(l == 1 for l, _ in M.lead), rec.quasi_smooth)
    lt = all(_is_platonic_direct(t) for t in tuples)
    report.add("log terminal", lt, rec.log_terminal)
    report.add("case", _case_direct(M.kind, tuples) if lt else "", rec.case)
    report.run("canonical key", lambda: canonical_key_kstar(M), rec.canonical_key)
    return report
