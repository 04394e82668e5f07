"""Brute-force reference computations used to check the solvers.

Nothing here touches the closed-form ``p``/``q`` construction or the
trace formula for the eigenvalue.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .errors import (
    DimensionMismatchError,
    EmptyFeasibleGridError,
    MissingCapsError,
    NoFiniteCycleError,
    NotSquareError,
    TooLargeError,
)
from .linalg import TropMatrix
from .location import LocationInstance
from .semiring import TropScalar

__all__ = [
    "MAX_CYCLE_ORDER",
    "MAX_GRID_POINTS",
    "GridSpec",
    "max_cycle_mean",
    "default_grid",
    "grid_minimize",
]

MAX_CYCLE_ORDER = 8
MAX_GRID_POINTS = 10**7
ARGMIN_ATOL = 1e-9


def max_cycle_mean(a: TropMatrix) -> TropScalar:
    """Largest ``weight / length`` over all elementary cycles.

    Cycles are enumerated by depth-first search from each start vertex
    through higher-numbered vertices only, so each cycle is seen once.
    """
    rows, cols = a.shape
    if rows != cols:
        raise NotSquareError(f"expected a square matrix, got shape {a.shape}")
    n = rows
    if n > MAX_CYCLE_ORDER:
        raise TooLargeError(f"cycle enumeration is capped at order {MAX_CYCLE_ORDER}")
    w = [[e.value for e in row] for row in a.rows]
    best: Optional[float] = None

    for start in range(n):
        stack = [(start, 0.0, 1, frozenset((start,)))]
        while stack:
            v, weight, length, visited = stack.pop()
            for nxt in range(start, n):
                edge = w[v][nxt]
                if edge is None:
                    continue
                if nxt == start:
                    mean = (weight + edge) / length
                    if best is None or mean > best:
                        best = mean
                elif nxt not in visited:
                    stack.append((nxt, weight + edge, length + 1, visited | {nxt}))

    if best is None:
        raise NoFiniteCycleError("the support digraph has no cycle")
    return TropScalar(best)


@dataclass(frozen=True)
class GridSpec:
    """Axis-aligned lattice ``lower + k*step`` clipped to ``upper``."""

    lower: Tuple[float, ...]
    upper: Tuple[float, ...]
    step: float

    def __post_init__(self):
        lo = tuple(float(v) for v in np.atleast_1d(self.lower))
        hi = tuple(float(v) for v in np.atleast_1d(self.upper))
        if len(lo) != len(hi):
            raise DimensionMismatchError("lower and upper bounds differ in length")
        if not (np.all(np.isfinite(lo)) and np.all(np.isfinite(hi))):
            raise ValueError("grid bounds must be finite")
        if any(l > h for l, h in zip(lo, hi)):
            raise ValueError("grid lower bound exceeds upper bound")
        if not (self.step > 0 and np.isfinite(self.step)):
            raise ValueError("grid step must be positive")
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)
        object.__setattr__(self, "step", float(self.step))

    def axes(self) -> List[np.ndarray]:
        out = []
        for lo, hi in zip(self.lower, self.upper):
            count = int(np.floor((hi - lo) / self.step + 1e-9)) + 1
            out.append(lo + self.step * np.arange(count))
        return out

    @property
    def size(self) -> int:
        total = 1
        for lo, hi in zip(self.lower, self.upper):
            total *= int(np.floor((hi - lo) / self.step + 1e-9)) + 1
        return total


def default_grid(inst: LocationInstance, step: float = 0.25) -> GridSpec:
    """Bounding box of the points widened by ``max|w| + max|d|``, snapped
    outward onto multiples of ``step``."""
    pad = float(np.max(np.abs(inst.addends)))
    if inst.caps is not None:
        pad += float(np.max(np.abs(inst.caps)))
    lo = np.floor((inst.points.min(axis=0) - pad) / step) * step
    hi = np.ceil((inst.points.max(axis=0) + pad) / step) * step
    return GridSpec(tuple(lo), tuple(hi), step)


def _chunk_values(inst, axes, first_slice, constrained):
    """Objective (and cap slack) on the sub-grid with the first axis sliced."""
    n = inst.n
    sub_axes = [axes[0][first_slice]] + axes[1:]
    shape = tuple(len(ax) for ax in sub_axes)
    value = np.full(shape, -np.inf)
    slack = np.full(shape, -np.inf) if constrained else None
    for k in range(inst.m):
        dist = np.zeros(shape)
        for i in range(n):
            d = np.abs(sub_axes[i] - inst.points[k, i])
            idx = [None] * n
            idx[i] = slice(None)
            dist = np.maximum(dist, d[tuple(idx)])
        np.maximum(value, dist + inst.addends[k], out=value)
        if constrained:
            np.maximum(slack, dist - inst.caps[k], out=slack)
    return value, slack


def grid_minimize(
    inst: LocationInstance,
    grid: Optional[GridSpec] = None,
    constrained: bool = False,
    n_jobs: int = 1,
    chunk: Optional[int] = None,
    feasibility_atol: float = 1e-9,
) -> Tuple[float, np.ndarray]:
    """Exhaustive minimum of the objective over ``grid``.

    Returns the minimum and an ``(k, n)`` array of every grid point within
    ``1e-9`` of it, in lexicographic grid order. With ``constrained`` only
    points satisfying every cap are considered. The result does not depend
    on ``n_jobs`` or ``chunk``.
    """
    if grid is None:
        grid = default_grid(inst)
    if len(grid.lower) != inst.n:
        raise DimensionMismatchError("grid dimension does not match the instance")
    if constrained and inst.caps is None:
        raise MissingCapsError("constrained grid search needs caps")
    if grid.size > MAX_GRID_POINTS:
        raise TooLargeError(f"grid has {grid.size} points, limit is {MAX_GRID_POINTS}")

    axes = grid.axes()
    n0 = len(axes[0])
    if chunk is None:
        chunk = max(1, n0 // max(1, n_jobs))
    slices = [slice(s, min(s + chunk, n0)) for s in range(0, n0, chunk)]

    def work(sl):
        value, slack = _chunk_values(inst, axes, sl, constrained)
        if constrained:
            value = np.where(slack <= feasibility_atol, value, np.inf)
        return sl, value

    if n_jobs > 1:
        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            parts = list(pool.map(work, slices))
    else:
        parts = [work(sl) for sl in slices]

    best = min(float(np.min(v)) for _, v in parts)
    if not np.isfinite(best):
        raise EmptyFeasibleGridError("no grid point satisfies every distance cap")

    argmins = []
    for sl, v in parts:
        hits = np.argwhere(v <= best + ARGMIN_ATOL)
        for idx in hits:
            argmins.append(
                [axes[0][sl][idx[0]]] + [axes[i][idx[i]] for i in range(1, inst.n)]
            )
    return best, np.array(argmins, dtype=float).reshape(-1, inst.n)
