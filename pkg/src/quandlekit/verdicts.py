"""Structured outcomes of theorem checks.

A Verdict records what one check computed on each side of a claimed
relationship, whether the relationship holds, and enough evidence (witness
or counterexample) to replay the computation with the public operations.
Checks that bundle several claims nest their pieces under ``parts``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterator, List, Optional

RELATIONSHIPS = ("iff", "implies", "subgroup-embedding", "isomorphism", "emptiness")


@dataclass
class Verdict:
    theorem_id: str
    inputs: str
    relationship: str
    holds: bool
    lhs: Optional[bool] = None
    rhs: Optional[bool] = None
    vacuous: bool = False
    skipped: bool = False
    witness: Any = None
    counterexample: Any = None
    notes: str = ""
    parts: List["Verdict"] = field(default_factory=list)

    def __post_init__(self):
        if self.relationship not in RELATIONSHIPS:
            raise ValueError(f"unknown relationship {self.relationship!r}")

    def walk(self) -> Iterator["Verdict"]:
        """This verdict and every nested part, preorder."""
        yield self
        for part in self.parts:
            yield from part.walk()

    def to_json(self) -> dict:
        out = {
            "theorem_id": self.theorem_id,
            "inputs": self.inputs,
            "relationship": self.relationship,
            "holds": self.holds,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "vacuous": self.vacuous,
            "skipped": self.skipped,
            "witness": self.witness,
            "counterexample": self.counterexample,
            "notes": self.notes,
        }
        if self.parts:
            out["parts"] = [p.to_json() for p in self.parts]
        return out

    def render_text(self, indent: int = 0) -> str:
        if not self.holds:
            status = "FAIL"
        elif self.skipped:
            status = "skip"
        elif self.vacuous:
            status = "ok (vacuous)"
        else:
            status = "ok"
        pieces = [f"{'  ' * indent}[{status}] {self.theorem_id} :: {self.inputs}"]
        detail = []
        if self.lhs is not None or self.rhs is not None:
            detail.append(f"lhs={self.lhs} rhs={self.rhs} ({self.relationship})")
        if self.notes:
            detail.append(self.notes)
        if self.counterexample is not None:
            detail.append(f"counterexample: {self.counterexample}")
        if detail:
            pieces[0] += "  " + "; ".join(detail)
        pieces.extend(p.render_text(indent + 1) for p in self.parts)
        return "\n".join(pieces)


def make_iff(
    theorem_id: str,
    inputs: str,
    lhs: bool,
    rhs: bool,
    witness: Any = None,
    counterexample: Any = None,
    vacuous: bool = False,
    notes: str = "",
) -> Verdict:
    holds = bool(lhs) == bool(rhs)
    return Verdict(
        theorem_id,
        inputs,
        "iff",
        holds,
        lhs=bool(lhs),
        rhs=bool(rhs),
        vacuous=vacuous,
        witness=witness if holds else None,
        counterexample=counterexample if not holds else None,
        notes=notes,
    )


def make_implies(
    theorem_id: str,
    inputs: str,
    lhs: bool,
    rhs: bool,
    witness: Any = None,
    counterexample: Any = None,
    vacuous: bool = False,
    notes: str = "",
) -> Verdict:
    holds = (not lhs) or bool(rhs)
    return Verdict(
        theorem_id,
        inputs,
        "implies",
        holds,
        lhs=bool(lhs),
        rhs=bool(rhs),
        vacuous=vacuous,
        witness=witness if holds else None,
        counterexample=counterexample if not holds else None,
        notes=notes,
    )


def combine(
    theorem_id: str,
    inputs: str,
    relationship: str,
    parts: List[Verdict],
    notes: str = "",
) -> Verdict:
    """Roll sub-verdicts into one: holds iff every part holds."""
    return Verdict(
        theorem_id,
        inputs,
        relationship,
        holds=all(p.holds for p in parts),
        vacuous=bool(parts) and all(p.vacuous for p in parts),
        skipped=bool(parts) and all(p.skipped for p in parts),
        notes=notes,
        parts=parts,
    )


def make_skipped(theorem_id: str, inputs: str, relationship: str, reason: str) -> Verdict:
    return Verdict(theorem_id, inputs, relationship, holds=True, skipped=True, notes=reason)


def summarize(verdicts: List[Verdict]) -> dict:
    """Counts over every verdict node, nested parts included."""
    nodes = [v for top in verdicts for v in top.walk()]
    return {
        "total": len(nodes),
        "holds": sum(1 for v in nodes if v.holds),
        "failed": sum(1 for v in nodes if not v.holds),
        "vacuous": sum(1 for v in nodes if v.vacuous and v.holds),
        "skipped": sum(1 for v in nodes if v.skipped),
    }


REPORT_VERSION = 1


def report_json(catalog: List[str], verdicts: List[Verdict]) -> dict:
    return {
        "version": REPORT_VERSION,
        "catalog": list(catalog),
        "checks": [v.to_json() for v in verdicts],
        "summary": summarize(verdicts),
    }


REPORT_SCHEMA = {
    "type": "object",
    "required": ["version", "catalog", "checks", "summary"],
    "properties": {
        "version": {"type": "integer"},
        "catalog": {"type": "array", "items": {"type": "string"}},
        "checks": {"type": "array", "items": {"$ref": "#/$defs/verdict"}},
        "summary": {
            "type": "object",
            "required": ["total", "holds", "failed", "vacuous", "skipped"],
            "additionalProperties": {"type": "integer"},
        },
    },
    "$defs": {
        "verdict": {
            "type": "object",
            "required": ["theorem_id", "inputs", "relationship", "holds"],
            "properties": {
                "theorem_id": {"type": "string"},
                "inputs": {"type": "string"},
                "relationship": {"enum": list(RELATIONSHIPS)},
                "holds": {"type": "boolean"},
                "lhs": {"type": ["boolean", "null"]},
                "rhs": {"type": ["boolean", "null"]},
                "vacuous": {"type": "boolean"},
                "skipped": {"type": "boolean"},
                "notes": {"type": "string"},
                "parts": {"type": "array", "items": {"$ref": "#/$defs/verdict"}},
            },
        }
    },
}
