"""Check reports: verdict plus the first counterexample.

A report names the suite, the displayed-equation id that failed, the
first violating basis tuple in lexicographic order (1-based, as in the
file formats) and the residual vector or tensor entries.  Reports are
deterministic: identical inputs give identical reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple


@dataclass(frozen=True)
class Counterexample:
    equation: str
    indices: Tuple[int, ...]        # 1-based basis tuple
    residual: Tuple[Tuple[Tuple[int, ...], object], ...]  # sparse (index, coeff)

    def to_doc(self, fld):
        return {
            "equation": self.equation,
            "indices": list(self.indices),
            "residual": [[list(ix), fld.to_str(c)] for ix, c in self.residual],
        }


@dataclass(frozen=True)
class CheckReport:
    suite: str
    passed: bool
    counterexample: Optional[Counterexample] = None
    notes: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_doc(self, fld):
        doc = {"suite": self.suite, "verdict": self.verdict}
        doc["counterexample"] = (self.counterexample.to_doc(fld)
                                 if self.counterexample else None)
        if self.notes:
            doc["notes"] = list(self.notes)
        return doc


def sparse_vector(vec):
    """1-based sparse view of a residual vector."""
    return tuple(((k + 1,), c) for k, c in enumerate(vec) if c)


def sparse_tensor2(t):
    return tuple(((i + 1, j + 1), c)
                 for i, row in enumerate(t.entries)
                 for j, c in enumerate(row) if c)


def sparse_tensor3(t):
    return tuple(((i + 1, j + 1, k + 1), c)
                 for i, s in enumerate(t.entries)
                 for j, row in enumerate(s)
                 for k, c in enumerate(row) if c)


def merge_reports(suite_id: str, reports) -> CheckReport:
    """First failure wins, in the given deterministic order."""
    notes = []
    for rep in reports:
        notes.extend(rep.notes)
        if not rep.passed:
            return CheckReport(suite_id, False, rep.counterexample, tuple(notes))
    return CheckReport(suite_id, True, None, tuple(notes))
