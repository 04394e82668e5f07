"""JSON report construction with deterministic formatting.

Keys are emitted in a fixed order and every real is rounded to 12
significant digits, so identical inputs give byte-identical output.
"""

from __future__ import annotations

import json
from typing import Optional

import numpy as np

from .location import SolveReport
from .spectral import EigenResult


def fmt_real(x: float) -> float:
    v = float(f"{float(x):.12g}")
    return 0.0 if v == 0 else v


def _vec(v) -> list:
    return [fmt_real(e) for e in np.asarray(v, dtype=float)]


def solve_report_dict(report: SolveReport, oracle: Optional[dict] = None) -> dict:
    out = {"lambda": fmt_real(report.lam)}
    inter = report.intermediate
    if inter is not None:
        out["lambda0"] = fmt_real(inter.lambda0)
    out["p"] = _vec(report.family.p_array)
    out["q"] = _vec(report.family.q_array)
    out["exact"] = bool(report.exact)
    samples = []
    for i, (a, x, obj) in enumerate(zip(report.alphas, report.samples, report.objective_at_samples)):
        s = {"alpha": _vec(a), "x": _vec(x), "objective": fmt_real(obj)}
        if inter is not None:
            s["feasible"] = bool(report.feasible_at_samples[i])
            s["violation"] = fmt_real(report.violation_at_samples[i])
            s["excess"] = fmt_real(report.excess_at_samples[i])
        samples.append(s)
    out["samples"] = samples
    if inter is not None:
        out["intermediate"] = {
            "p0": _vec(inter.p0),
            "q0": _vec(inter.q0),
            "p1": _vec(inter.p1),
            "q1": _vec(inter.q1),
        }
    if oracle is not None:
        out["oracle"] = {"value": fmt_real(oracle["value"]), "gap": fmt_real(oracle["gap"])}
    return out


def eig_report_dict(res: EigenResult, oracle_value: Optional[float] = None) -> dict:
    out = {
        "lambda": fmt_real(res.lam.value),
        "basis": [_vec(b.to_array()) for b in res.basis],
    }
    if oracle_value is not None:
        out["oracle"] = {
            "value": fmt_real(oracle_value),
            "gap": fmt_real(abs(oracle_value - res.lam.value)),
        }
    return out


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
