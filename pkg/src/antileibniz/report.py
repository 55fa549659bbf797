"""
Verdict objects returned by every checker.

A ``Report`` is a named list of clauses. Each clause names one identity, says
whether it holds and, when it does not, carries a witness (1-based basis
indices or probe degrees). Reports are truthy iff every clause holds.
"""
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional

import pandas as pd

from .identities import statement


@dataclass(frozen=True)
class Clause:
    name: str
    anchor: str
    holds: bool
    witness: Any = None
    note: str = ""

    def to_dict(self) -> Dict[str, Any]:
        out = {
            "name": self.name,
            "anchor": self.anchor,
            "identity": statement(self.anchor),
            "holds": bool(self.holds),
            "witness": _plain(self.witness),
        }
        if self.note:
            out["note"] = self.note
        return out


def _plain(value: Any) -> Any:
    if isinstance(value, (tuple, list)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return str(value)


@dataclass
class Report:
    title: str
    clauses: List[Clause] = field(default_factory=list)
    elapsed: float = 0.0
    notes: List[str] = field(default_factory=list)
    error: Optional[str] = None

    def add(
            self,
            name: str,
            anchor: str,
            holds: bool,
            witness: Any = None,
            note: str = ""
    ) -> Clause:
        clause = Clause(name, anchor, bool(holds), None if holds else witness, note)
        self.clauses.append(clause)
        return clause

    def extend(
            self,
            other: "Report",
            prefix: str = ""
    ) -> "Report":
        """
        Appends another report's clauses, optionally prefixing their names.
         Notes already present are not repeated.
        """
        for clause in other.clauses:
            name = f"{prefix}{clause.name}" if prefix else clause.name
            self.clauses.append(
                Clause(name, clause.anchor, clause.holds, clause.witness, clause.note)
            )
        self.notes.extend(n for n in other.notes if n not in self.notes)
        return self

    @property
    def holds(self) -> bool:
        return self.error is None and all(c.holds for c in self.clauses)

    @property
    def verdict(self) -> str:
        if self.error is not None:
            return "error"
        return "pass" if self.holds else "fail"

    @property
    def witness(self) -> Any:
        failed = self.first_failure
        return failed.witness if failed else None

    @property
    def first_failure(self) -> Optional[Clause]:
        for clause in self.clauses:
            if not clause.holds:
                return clause
        return None

    def clause(self, name: str) -> Clause:
        for c in self.clauses:
            if c.name == name:
                return c
        raise KeyError(name)

    def __bool__(self) -> bool:
        return self.holds

    @contextmanager
    def timed(self) -> Iterator["Report"]:
        start = time.perf_counter()
        try:
            yield self
        finally:
            self.elapsed += time.perf_counter() - start

    def to_dict(
            self,
            timing: bool = False
    ) -> Dict[str, Any]:
        """
        Plain-data form used by machine output.

        param: timing; Include elapsed seconds. Off by default so reports of
         identical inputs serialize identically. (bool)
        :return: JSON-ready dictionary. (dict)
        """
        out: Dict[str, Any] = {
            "title": self.title,
            "verdict": self.verdict,
            "clauses": [c.to_dict() for c in self.clauses],
        }
        if self.notes:
            out["notes"] = list(self.notes)
        if self.error is not None:
            out["error"] = self.error
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out

    def to_frame(self) -> pd.DataFrame:
        rows = [
            {
                "clause": c.name,
                "anchor": c.anchor,
                "holds": c.holds,
                "witness": "" if c.witness is None else str(_plain(c.witness)),
            }
            for c in self.clauses
        ]
        return pd.DataFrame(rows, columns=["clause", "anchor", "holds", "witness"])

    def render(self) -> str:
        lines = [f"{self.title}: {self.verdict.upper()}"]
        if self.clauses:
            lines.append(self.to_frame().to_string(index=False))
        lines.extend(f"note: {n}" for n in self.notes)
        if self.error is not None:
            lines.append(f"error: {self.error}")
        return "\n".join(lines)
