"""Check reports: one entry per axiom with a first-counterexample witness."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .linalg import flatten, is_zero
from .scalars import format_scalar

PASS = "pass"
FAIL = "fail"
PRECONDITION = "precondition-failed"


@dataclass(frozen=True)
class Witness:
    indices: tuple
    defect: tuple

    def to_json(self) -> dict:
        return {"indices": list(self.indices), "defect": [format_scalar(x) for x in self.defect]}


@dataclass(frozen=True)
class CheckEntry:
    check: str
    status: str
    witness: Optional[Witness] = None
    note: str = ""

    def __post_init__(self):
        if self.status not in (PASS, FAIL, PRECONDITION):
            raise ValueError(f"unknown status {self.status!r}")
        if self.status != PASS and self.witness is not None and is_zero(self.witness.defect):
            raise ValueError(f"failing entry {self.check!r} carries a zero defect")

    @property
    def passed(self) -> bool:
        return self.status == PASS


@dataclass
class CheckReport:
    """Ordered check entries plus named boolean verdicts.

    ``passed`` is true iff every entry passes.  Verdicts are informational
    (e.g. the two sides of an equivalence); the agreement between them is
    itself recorded as an entry by the checkers that compute it.
    """

    name: str
    entries: list = field(default_factory=list)
    verdicts: dict = field(default_factory=dict)

    def add(self, check: str, witness: Optional[Witness] = None, note: str = "", status: Optional[str] = None):
        if status is None:
            status = PASS if witness is None else FAIL
        self.entries.append(CheckEntry(check, status, witness, note))
        return self

    def extend(self, other: "CheckReport", prefix: str = "") -> "CheckReport":
        for e in other.entries:
            self.entries.append(CheckEntry(prefix + e.check, e.status, e.witness, e.note))
        return self

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def __bool__(self):
        return self.passed

    def __getitem__(self, check: str) -> CheckEntry:
        for e in self.entries:
            if e.check == check:
                return e
        raise KeyError(check)

    def __contains__(self, check: str) -> bool:
        return any(e.check == check for e in self.entries)

    def failures(self) -> list:
        return [e for e in self.entries if not e.passed]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "pass": self.passed,
            "checks": [
                {
                    "id": e.check,
                    "pass": e.passed,
                    "status": e.status,
                    "note": e.note,
                    "witness": e.witness.to_json() if e.witness else None,
                }
                for e in self.entries
            ],
            "verdicts": {k: bool(v) for k, v in sorted(self.verdicts.items())},
        }

    def to_text(self) -> str:
        lines = [f"{self.name}: {'PASS' if self.passed else 'FAIL'}"]
        for e in self.entries:
            line = f"  [{e.status}] {e.check}"
            if e.witness is not None:
                w = e.witness.to_json()
                line += f"  at {tuple(w['indices'])}  defect ({', '.join(w['defect'])})"
            if e.note:
                line += f"  -- {e.note}"
            lines.append(line)
        for k, v in sorted(self.verdicts.items()):
            lines.append(f"  verdict {k} = {bool(v)}")
        return "\n".join(lines)


def first_failure(tuples, defect_fn):
    """Return the witness for the first tuple (in iteration order) with a nonzero defect."""
    for idx in tuples:
        d = defect_fn(*idx)
        if not is_zero(d):
            return Witness(tuple(idx), flatten(d))
    return None
