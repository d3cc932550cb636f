"""Serializable run reports for the command-line interface.

Reports are JSON with a fixed key order, so identical inputs produce
byte-identical output (modulo the tool version field).  Exact rationals
are written as numerator/denominator integer pairs together with a
decimal rendering at 15 significant digits.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .extremal import CanonicalForm, ExtremalResult
from .indices import IndexStatus, IndexValue
from .oracle import ConjectureReport
from .table import ContingencyTable, PairCounts


def fraction_payload(value: Fraction) -> dict[str, int]:
    return {"numerator": value.numerator, "denominator": value.denominator}


def index_value_payload(value: IndexValue) -> dict[str, Any]:
    payload: dict[str, Any] = {"status": value.status.value}
    if value.status is IndexStatus.DEFINED:
        payload["rational"] = fraction_payload(value.rational)
        if value.root_sign:
            payload["root"] = {
                "sign": value.root_sign,
                "radicand": fraction_payload(value.radicand),
            }
        payload["decimal"] = value.decimal()
    elif value.note:
        payload["note"] = value.note
    return payload


def table_payload(t: ContingencyTable) -> dict[str, Any]:
    return {
        "counts": [list(row) for row in t.counts],
        "row_marginals": list(t.row_marginals),
        "col_marginals": list(t.col_marginals),
        "n": t.n,
    }


def pair_counts_payload(p: PairCounts) -> dict[str, int]:
    return {"a": p.a, "b": p.b, "c": p.c, "d": p.d}


def canonical_payload(c: CanonicalForm) -> dict[str, Any]:
    return {
        "n": c.n,
        "x": c.x,
        "y": c.y,
        "transform": {
            "row_swap": c.transform.row_swap,
            "col_swap": c.transform.col_swap,
            "transposed": c.transform.transposed,
        },
    }


def extremal_payload(result: ExtremalResult) -> dict[str, Any]:
    payload: dict[str, Any] = {"objective": result.objective.value}
    if result.k_values is not None:
        payload["k_values"] = list(result.k_values)
    payload["q"] = result.q_value
    payload["tables"] = [table_payload(t) for t in result.tables]
    return payload


def conjecture_payload(report: ConjectureReport) -> dict[str, Any]:
    # elapsed_seconds stays out of the serialized report on purpose: the
    # CLI promises byte-identical output for identical inputs.
    return {
        "n_max": report.n_max,
        "cases_scanned": report.cases_scanned,
        "complete": report.complete,
        "tie_rule": report.tie_rule,
        "strict_violations": report.strict_violations,
        "counterexample_count": len(report.counterexamples),
        "specs": [
            {
                "row_marginals": list(s.spec.row_marginals),
                "col_marginals": list(s.spec.col_marginals),
                "n": s.spec.n,
                "max_q": s.max_q,
                "maximizer_count": s.maximizer_count,
                "contained_count": s.contained_count,
            }
            for s in report.specs
        ],
        "counterexamples": [
            {
                "row_marginals": list(ce.spec.row_marginals),
                "col_marginals": list(ce.spec.col_marginals),
                "n": ce.spec.n,
                "max_q": ce.max_q,
                "table": table_payload(ce.table),
                "contained_count": ce.contained_count,
                "tie_set": [table_payload(t) for t in ce.tie_set],
            }
            for ce in report.counterexamples
        ],
    }


def digest_inputs(payload: dict[str, Any]) -> str:
    """Stable checksum of the command's semantically relevant inputs."""
    encoded = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode("utf-8")
    return "sha256:" + hashlib.sha256(encoded).hexdigest()


@dataclass(frozen=True)
class RunReport:
    command: str
    inputs_digest: str
    results: dict[str, Any]
    tool_version: str

    def to_json(self) -> str:
        return (
            json.dumps(
                {
                    "command": self.command,
                    "tool_version": self.tool_version,
                    "inputs_digest": self.inputs_digest,
                    "results": self.results,
                },
                indent=2,
            )
            + "\n"
        )
