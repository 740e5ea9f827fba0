"""JSONL record lines: one classified surface per line."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Union

from .exact import int_matrix
from .kstar import KStarRecord
from .kstar import make_record as make_kstar_record
from .kstar.surface import KStarGorData, from_matrix
from .toric import FwppRecord, ToricGorData
from .toric import make_record as make_toric_record

SCHEMA_VERSION = "1"

AnyRecord = Union[FwppRecord, KStarRecord]


class RecordFormatError(ValueError):
    pass


@dataclass(frozen=True)
class RecordLine:
    """Flat, serializable view of a record.

    ``weights`` and ``torsion`` are set for toric records only;
    ``quasi_smooth`` and ``log_terminal`` for K*-surfaces only.
    """

    id: str
    kind: str
    case: str
    iota: int
    local_indices: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]
    weights: tuple[int, ...] | None = None
    torsion: tuple[int, ...] | None = None
    quasi_smooth: bool | None = None
    log_terminal: bool | None = None
    schema_version: str = SCHEMA_VERSION

    def sort_key(self) -> tuple[int, str, str]:
        return (self.iota, self.kind, self.id)

    def to_json(self) -> str:
        obj: dict = {
            "schema_version": self.schema_version,
            "id": self.id,
            "kind": self.kind,
            "case": self.case,
            "iota": self.iota,
            "local_indices": list(self.local_indices),
            "matrix": [list(row) for row in self.matrix],
        }
        if self.kind == "toric":
            obj["weights"] = list(self.weights or ())
            obj["torsion"] = list(self.torsion or ())
        else:
            obj["quasi_smooth"] = self.quasi_smooth
            obj["log_terminal"] = self.log_terminal
        return json.dumps(obj, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> RecordLine:
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise RecordFormatError(f"not JSON: {exc}") from exc
        if not isinstance(obj, dict):
            raise RecordFormatError("record line must be a JSON object")
        if obj.get("schema_version") != SCHEMA_VERSION:
            raise RecordFormatError(f"unsupported schema_version {obj.get('schema_version')!r}")
        kind = obj.get("kind")
        if kind not in ("toric", "kstar"):
            raise RecordFormatError(f"unknown kind {kind!r}")
        try:
            common = dict(
                id=str(obj["id"]),
                kind=kind,
                case=str(obj["case"]),
                iota=int(obj["iota"]),
                local_indices=tuple(int(x) for x in obj["local_indices"]),
                matrix=tuple(tuple(int(x) for x in row) for row in obj["matrix"]),
            )
            if kind == "toric":
                return cls(
                    **common,
                    weights=tuple(int(x) for x in obj["weights"]),
                    torsion=tuple(int(x) for x in obj["torsion"]),
                )
            return cls(**common, quasi_smooth=bool(obj["quasi_smooth"]), log_terminal=bool(obj["log_terminal"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise RecordFormatError(f"bad field: {exc}") from exc


def to_line(rec: AnyRecord) -> RecordLine:
    if isinstance(rec, FwppRecord):
        return RecordLine(
            id=rec.id,
            kind="toric",
            case="toric",
            iota=rec.iota,
            local_indices=rec.gor.local,
            matrix=tuple(rec.matrix),
            weights=tuple(rec.weights),
            torsion=tuple(rec.torsion),
        )
    return RecordLine(
        id=rec.id,
        kind="kstar",
        case=rec.case,
        iota=rec.iota,
        local_indices=rec.gor.local,
        matrix=tuple(rec.matrix.matrix),
        quasi_smooth=rec.quasi_smooth,
        log_terminal=rec.log_terminal,
    )


def from_line(line: RecordLine) -> AnyRecord:
    """Rebuild a record carrying exactly the claims stored on the line.

    Nothing is recomputed except the relation degrees of a K*-surface, which
    are not part of the line format.
    """
    try:
        key = bytes.fromhex(line.id)
    except ValueError as exc:
        raise RecordFormatError(f"id is not hex: {line.id!r}") from exc
    li = line.local_indices
    if line.kind == "toric":
        if len(li) != 3:
            raise RecordFormatError("toric records carry three local indices")
        return FwppRecord(
            matrix=int_matrix(line.matrix),
            weights=tuple(line.weights or ()),  # type: ignore[arg-type]
            torsion=tuple(line.torsion or ()),
            gor=ToricGorData(li[0], li[1], li[2], line.iota),
            canonical_key=key,
        )
    try:
        M = from_matrix(line.matrix)
    except ValueError as exc:
        raise RecordFormatError(str(exc)) from exc
    if M.kind == "ee":
        if len(li) != 3:
            raise RecordFormatError("ee records carry three local indices")
        gor = KStarGorData(li[0], li[1], (li[2],), line.iota)
    else:
        if len(li) != M.r + 2:
            raise RecordFormatError("ep records carry r+2 local indices")
        gor = KStarGorData(li[0], None, tuple(li[1:]), line.iota)
    return KStarRecord(
        matrix=M,
        case=line.case,
        gor=gor,
        quasi_smooth=bool(line.quasi_smooth),
        log_terminal=bool(line.log_terminal),
        relation_degrees=M.relation_degrees(),
        canonical_key=key,
    )


def record_from_matrix(kind: str, matrix) -> AnyRecord:
    """Fresh record computed from a defining matrix of the given kind."""
    if kind == "toric":
        return make_toric_record(int_matrix(matrix))
    return make_kstar_record(from_matrix(matrix))
