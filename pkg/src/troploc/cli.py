"""Command-line interface: ``troploc solve`` and ``troploc eig``.

Exit codes: 0 success, 2 invalid input, 3 the oracle grid is too large or
has no feasible point.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from . import __version__
from .errors import EmptyFeasibleGridError, ReducibleError, TooLargeError, TropicalError
from .location import LocationInstance, solve
from .oracle import default_grid, grid_minimize, max_cycle_mean
from .report import dumps, eig_report_dict, solve_report_dict
from .spectral import eigenbasis
from .svg import render_svg
from .validation import check_tropical_matrix

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_ORACLE = 3


class InputError(Exception):
    """Invalid user input; reported on stderr with exit code 2."""


class OracleError(Exception):
    """The oracle could not run; exit code 3."""


def _diag(msg: str) -> None:
    text = f"troploc: error: {msg}"
    if sys.stderr.isatty() and "NO_COLOR" not in os.environ:
        text = f"\x1b[31m{text}\x1b[0m"
    print(text, file=sys.stderr)


def _reject_constant(token: str):
    raise ValueError(f"{token} is not a valid number")


def _load_json(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text, parse_constant=_reject_constant)
    except (json.JSONDecodeError, ValueError) as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from None


def _real_list(values, name: str) -> List[float]:
    if not isinstance(values, list):
        raise InputError(f"{name} must be a list of numbers")
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise InputError(f"{name} must contain only numbers, got {v!r}")
        if not math.isfinite(v):
            raise InputError(f"{name} must be finite")
        out.append(float(v))
    return out


def parse_instance(doc) -> LocationInstance:
    """Validate an instance document ``{"points", "weights"?, "caps"?}``."""
    if not isinstance(doc, dict) or "points" not in doc:
        raise InputError('instance must be a JSON object with a "points" array')
    points = doc["points"]
    if not isinstance(points, list) or not points:
        raise InputError('"points" must be a non-empty list of rows')
    rows = [_real_list(r, "points row") for r in points]
    n = len(rows[0])
    if n == 0:
        raise InputError("points must have at least one coordinate")
    for i, r in enumerate(rows):
        if len(r) != n:
            raise InputError(f"ragged rows: row {i + 1} has {len(r)} coordinates, expected {n}")
    m = len(rows)
    extras = {}
    for key in ("weights", "caps"):
        if doc.get(key) is not None:
            vals = _real_list(doc[key], key)
            if len(vals) != m:
                raise InputError(f'"{key}" has length {len(vals)}, expected {m}')
            extras[key] = vals
    return LocationInstance(rows, extras.get("weights"), extras.get("caps"))


def _load_csv(path: str, with_caps: bool) -> dict:
    """Rows ``x1,...,xn,w[,d]``; a ``d`` column is read only when
    ``with_caps`` is set."""
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            raw = [row for row in csv.reader(fh) if row and any(c.strip() for c in row)]
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        table = [[float(c) for c in row] for row in raw]
    except ValueError as exc:
        raise InputError(f"malformed CSV in {path}: {exc}") from None
    tail = 2 if with_caps else 1
    if not table:
        raise InputError(f"{path} has no rows")
    width = len(table[0])
    if any(len(r) != width for r in table):
        raise InputError("ragged rows in CSV input")
    if width <= tail:
        raise InputError(f"CSV rows need at least {tail + 1} columns")
    doc = {"points": [r[: width - tail] for r in table], "weights": [r[width - tail] for r in table]}
    if with_caps:
        doc["caps"] = [r[-1] for r in table]
    return doc


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_solve(args) -> int:
    doc = _load_csv(args.input, args.constrained) if args.csv else _load_json(args.input)
    inst = parse_instance(doc)
    if args.constrained and not inst.has_caps:
        raise InputError("--constrained requires caps in the instance")
    if args.svg and inst.n != 2:
        raise InputError(f"--svg needs a planar instance, got dimension {inst.n}")
    if args.samples < 1:
        raise InputError("--samples must be at least 1")
    if not args.grid_step > 0:
        raise InputError("--grid-step must be positive")
    if not args.constrained and inst.has_caps:
        inst = LocationInstance(inst.points, inst.addends, None)

    report = solve(inst, constrained=args.constrained, n_samples=args.samples)

    oracle = None
    if args.oracle:
        grid = default_grid(inst, args.grid_step)
        try:
            value, _ = grid_minimize(inst, grid, constrained=args.constrained)
        except TooLargeError as exc:
            raise OracleError(str(exc)) from None
        except EmptyFeasibleGridError as exc:
            raise OracleError(str(exc)) from None
        optimum = report.best_objective if args.constrained else report.lam
        oracle = {"value": value, "gap": abs(value - optimum)}

    _emit(dumps(solve_report_dict(report, oracle)), args.out)
    if args.svg:
        Path(args.svg).write_text(render_svg(inst, report), encoding="utf-8")
    return EXIT_OK


def cmd_eig(args) -> int:
    doc = _load_json(args.matrix)
    try:
        mat = check_tropical_matrix(doc)
    except (TropicalError, ValueError, TypeError) as exc:
        raise InputError(f"invalid matrix: {exc}") from None
    if not mat.is_square:
        raise InputError(f"matrix must be square, got shape {mat.shape[0]}x{mat.shape[1]}")
    try:
        res = eigenbasis(mat)
    except ReducibleError as exc:
        raise InputError(str(exc)) from None
    oracle_value = None
    if args.oracle:
        try:
            oracle_value = max_cycle_mean(mat).value
        except TooLargeError as exc:
            raise OracleError(str(exc)) from None
    _emit(dumps(eig_report_dict(res, oracle_value)), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="troploc",
        description="Max-plus spectral tools and Chebyshev minimax facility location.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("solve", help="solve a minimax location instance")
    ps.add_argument("--input", required=True, help="instance file (JSON, or CSV with --csv)")
    ps.add_argument("--csv", action="store_true", help="read rows x1,...,xn,w[,d] from CSV")
    ps.add_argument("--constrained", action="store_true", help="enforce the distance caps")
    ps.add_argument("--samples", type=int, default=5, help="uniform blend weights to sample")
    ps.add_argument("--svg", help="write an SVG drawing (planar instances only)")
    ps.add_argument("--oracle", action="store_true", help="cross-check against grid search")
    ps.add_argument("--grid-step", type=float, default=0.25, help="oracle grid step")
    ps.add_argument("--out", help="write the report here instead of stdout")
    ps.set_defaults(func=cmd_solve)

    pe = sub.add_parser("eig", help="eigenvalue and eigenvectors of a max-plus matrix")
    pe.add_argument("--matrix", required=True, help="JSON 2D array, null for the zero element")
    pe.add_argument("--oracle", action="store_true", help="cross-check by cycle enumeration")
    pe.add_argument("--out", help="write the report here instead of stdout")
    pe.set_defaults(func=cmd_eig)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        _diag(str(exc))
        return EXIT_INPUT
    except OracleError as exc:
        _diag(str(exc))
        return EXIT_ORACLE
    except TropicalError as exc:
        _diag(str(exc))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
