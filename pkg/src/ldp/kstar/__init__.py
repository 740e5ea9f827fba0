"""Non-toric log terminal K*-surfaces of Picard number one, by Gorenstein index."""

from __future__ import annotations

from dataclasses import dataclass

from .nonqs import nonqs_candidates
from .qs import build_qs_matrix, classify_qs, qs_candidates
from .surface import (
    CASE_LABELS,
    KStarGorData,
    KStarMatrix,
    ZeroSlopeSum,
    canonical_key_kstar,
    case_label,
    ee,
    ep,
    from_matrix,
    is_log_terminal,
    is_platonic,
    is_quasi_smooth,
    is_valid,
    local_data,
    local_data_ee,
    local_data_ep,
    normal_form,
    u_B,
)


@dataclass(frozen=True)
class KStarRecord:
    matrix: KStarMatrix
    case: str
    gor: KStarGorData
    quasi_smooth: bool
    log_terminal: bool
    relation_degrees: tuple
    canonical_key: bytes

    @property
    def iota(self) -> int:
        return self.gor.iota

    @property
    def id(self) -> str:
        return self.canonical_key.hex()


def make_record(M: KStarMatrix) -> KStarRecord:
    """Record for the class of ``M``; the stored matrix is the normal form."""
    N = normal_form(M)
    lt = is_log_terminal(N)
    return KStarRecord(
        matrix=N,
        case=case_label(N) if lt else "",
        gor=local_data(N),
        quasi_smooth=is_quasi_smooth(N),
        log_terminal=lt,
        relation_degrees=N.relation_degrees(),
        canonical_key=canonical_key_kstar(N),
    )


def _accept(M: KStarMatrix, iota: int, want_qs: bool) -> bool:
    if not is_valid(M) or is_quasi_smooth(M) != want_qs or not is_log_terminal(M):
        return False
    try:
        return local_data(M).iota == iota
    except ZeroSlopeSum:
        return False


def enumerate_nonqs(iota: int) -> list[KStarRecord]:
    """Non-quasi-smooth log terminal surfaces of index ``iota``, sorted by key."""
    if iota < 1:
        raise ValueError("iota must be positive")
    found: dict[bytes, KStarMatrix] = {}
    for M in nonqs_candidates(iota):
        if _accept(M, iota, False):
            found.setdefault(canonical_key_kstar(M), M)
    return [make_record(found[k]) for k in sorted(found)]


def classify_kstar(iota: int) -> list[KStarRecord]:
    """All non-toric log terminal K*-surfaces of Picard number one and index ``iota``.

    One record per family, sorted by canonical key.
    """
    if iota < 1:
        raise ValueError("iota must be positive")
    recs = {rec.canonical_key: rec for rec in enumerate_nonqs(iota)}
    for M in classify_qs(iota):
        rec = make_record(M)
        recs.setdefault(rec.canonical_key, rec)
    return [recs[k] for k in sorted(recs)]


__all__ = [
    "CASE_LABELS",
    "KStarGorData",
    "KStarMatrix",
    "KStarRecord",
    "build_qs_matrix",
    "canonical_key_kstar",
    "case_label",
    "classify_kstar",
    "classify_qs",
    "ee",
    "ep",
    "enumerate_nonqs",
    "from_matrix",
    "is_log_terminal",
    "is_platonic",
    "is_quasi_smooth",
    "is_valid",
    "local_data",
    "local_data_ee",
    "local_data_ep",
    "make_record",
    "normal_form",
    "qs_candidates",
    "u_B",
]
