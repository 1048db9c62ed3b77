"""Serialization of verification results.

A report is one JSON object with sorted keys. Rationals are written as
``"num/den"`` strings and integers stay integers, so no floating point ever
reaches the output. Runtime is left out unless asked for, which keeps
reports byte-identical across runs.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Iterable, Optional

from .verify import TheoremResult

SCHEMA = "szeged-report/1"


def fmt_value(v: Any) -> Any:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, bytes):
        return v.decode("ascii")
    if isinstance(v, dict):
        return {str(k): fmt_value(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [fmt_value(x) for x in v]
    return v


def result_record(res: TheoremResult, timing: bool = False) -> dict:
    rec = {
        "theorem": res.theorem,
        "n": res.n,
        "pass": res.passed,
        "bound": fmt_value(res.bound),
        "attainers": list(res.attainers),
        "witnesses": list(res.witnesses),
        "reasons": list(res.reasons),
        "details": fmt_value(res.details),
    }
    if res.parts:
        rec["parts"] = [result_record(p, timing) for p in res.parts]
    if timing:
        rec["runtime_ms"] = res.runtime_ms
    return rec


def report_document(results: Iterable[TheoremResult], command: str, seed: Optional[int] = None,
                    guards: Optional[dict] = None, timing: bool = False) -> dict:
    return {
        "schema": SCHEMA,
        "command": command,
        "seed": seed,
        "guards": guards or {},
        "results": [result_record(r, timing) for r in results],
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def loads(text: str) -> dict:
    doc = json.loads(text)
    if doc.get("schema") != SCHEMA:
        raise ValueError(f"unsupported report schema {doc.get('schema')!r}")
    return doc


def summary_table(results: Iterable[TheoremResult]) -> str:
    """One line per result: theorem, n, PASS/FAIL, bound, first reason."""
    lines = [f"{'theorem':<20} {'n':>3}  {'result':<6} {'bound':<16} note"]
    for r in results:
        bound = fmt_value(r.bound) if r.bound is not None else "-"
        note = r.reasons[0] if r.reasons else ""
        n = "-" if r.n is None else str(r.n)
        lines.append(f"{r.theorem:<20} {n:>3}  {'PASS' if r.passed else 'FAIL':<6} {str(bound):<16} {note}")
        for p in r.parts:
            note = p.reasons[0] if p.reasons else ""
            lines.append(f"  {p.theorem:<18} {'-':>3}  {'PASS' if p.passed else 'FAIL':<6} {'-':<16} {note}")
    return "\n".join(lines) + "\n"
