"""Minimax single-facility location with Chebyshev distance.

For demand points ``r_k`` and addends ``w_k`` the problem is::

    min_x max_k ( max_i |r_ik - x_i| + w_k )

The optimum comes in closed form from ``p_i = max_k (r_ik + w_k)`` and
``q_i = min_k (r_ik - w_k)``: the optimal value is ``max_i (p_i - q_i) / 2``
and the minimizers are ``x_i = α_i (p_i - λ) + (1 - α_i)(q_i + λ)``.
Per-point distance caps are handled by folding them into a normalized
objective of the same shape.

Every solve also runs the max-plus route (``(q⁻p)^(1/2)`` and the
eigenvalue of the augmented matrix) and raises
:class:`~troploc.errors.ConsistencyError` if the routes disagree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import ConsistencyError, DimensionMismatchError, MissingCapsError
from .linalg import TropMatrix, TropVector, product, vec_add, vec_conjugate, vec_scale
from .semiring import ZERO, TropScalar, trop_inv, trop_pow
from . import spectral

__all__ = [
    "FEASIBILITY_ATOL",
    "EXACT_ATOL",
    "LocationInstance",
    "SolutionFamily",
    "ConstrainedIntermediate",
    "SolveReport",
    "chebyshev",
    "chebyshev_tropical",
    "objective",
    "constraint_slack",
    "is_feasible",
    "build_pq",
    "build_pq_tropical",
    "build_caps_pq",
    "augmented_matrix",
    "lambda_tropical",
    "lambda_spectral",
    "solve_unconstrained",
    "solve_constrained",
    "solve",
    "sample_family",
]

FEASIBILITY_ATOL = 1e-9
EXACT_ATOL = 1e-9
# Relative bound for agreement between the closed-form and max-plus routes.
ROUTE_RTOL = 1e-12


@dataclass(frozen=True)
class LocationInstance:
    """``m`` demand points in ``R^n`` (rows of ``points``) with addends and
    optional distance caps."""

    points: np.ndarray
    addends: Optional[np.ndarray] = None
    caps: Optional[np.ndarray] = None

    def __post_init__(self):
        pts = np.array(self.points, dtype=float)
        if pts.ndim == 1:
            pts = pts[:, None]
        if pts.ndim != 2 or pts.shape[0] < 1 or pts.shape[1] < 1:
            raise DimensionMismatchError("points must form an (m, n) array with m, n >= 1")
        if not np.all(np.isfinite(pts)):
            raise ValueError("point coordinates must be finite")
        m = pts.shape[0]
        w = np.zeros(m) if self.addends is None else np.array(self.addends, dtype=float)
        if w.shape != (m,):
            raise DimensionMismatchError(f"expected {m} addends, got shape {w.shape}")
        if not np.all(np.isfinite(w)):
            raise ValueError("addends must be finite")
        caps = None
        if self.caps is not None:
            caps = np.array(self.caps, dtype=float)
            if caps.shape != (m,):
                raise DimensionMismatchError(f"expected {m} caps, got shape {caps.shape}")
            if not np.all(np.isfinite(caps)):
                raise ValueError("caps must be finite")
            caps.setflags(write=False)
        pts.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "addends", w)
        object.__setattr__(self, "caps", caps)

    @property
    def m(self) -> int:
        return self.points.shape[0]

    @property
    def n(self) -> int:
        return self.points.shape[1]

    @property
    def has_caps(self) -> bool:
        return self.caps is not None

    def translated(self, t: Sequence[float]) -> "LocationInstance":
        return LocationInstance(self.points + np.asarray(t, dtype=float), self.addends, self.caps)


@dataclass(frozen=True)
class SolutionFamily:
    """Optimal value ``lam`` with the vectors ``p`` and ``q`` that generate
    every minimizer ``x(α)``."""

    lam: float
    p: TropVector
    q: TropVector

    @property
    def n(self) -> int:
        return len(self.p)

    @property
    def p_array(self) -> np.ndarray:
        return self.p.to_array()

    @property
    def q_array(self) -> np.ndarray:
        return self.q.to_array()

    @property
    def lower(self) -> np.ndarray:
        """``x(α)`` at ``α = 1`` in every coordinate."""
        return self.p_array - self.lam

    @property
    def upper(self) -> np.ndarray:
        """``x(α)`` at ``α = 0`` in every coordinate."""
        return self.q_array + self.lam

    def point(self, alpha) -> np.ndarray:
        """``x_i = α_i (p_i - λ) + (1 - α_i)(q_i + λ)``.

        ``alpha`` is a scalar applied to every coordinate or one weight per
        coordinate, each in ``[0, 1]``.
        """
        a = np.broadcast_to(np.asarray(alpha, dtype=float), (self.n,))
        if np.any(a < 0.0) or np.any(a > 1.0):
            raise ValueError("alpha weights must lie in [0, 1]")
        return a * self.lower + (1.0 - a) * self.upper


@dataclass(frozen=True)
class ConstrainedIntermediate:
    p0: np.ndarray
    q0: np.ndarray
    lambda0: float
    p1: np.ndarray
    q1: np.ndarray


@dataclass
class SolveReport:
    family: SolutionFamily
    alphas: List[np.ndarray]
    samples: List[np.ndarray]
    objective_at_samples: List[float]
    exact: bool
    intermediate: Optional[ConstrainedIntermediate] = None
    feasible_at_samples: Optional[List[bool]] = None
    violation_at_samples: Optional[List[float]] = None
    excess_at_samples: Optional[List[float]] = None
    lambda_routes: dict = field(default_factory=dict)

    @property
    def constrained(self) -> bool:
        return self.intermediate is not None

    @property
    def lam(self) -> float:
        return self.family.lam

    @property
    def best_objective(self) -> float:
        """Smallest original-units objective among feasible samples, or
        among all samples when none is feasible."""
        vals = self.objective_at_samples
        if self.feasible_at_samples is not None and any(self.feasible_at_samples):
            vals = [v for v, ok in zip(vals, self.feasible_at_samples) if ok]
        return min(vals)


def _as_vector(x, n: Optional[int] = None) -> np.ndarray:
    v = np.atleast_1d(np.asarray(x, dtype=float))
    if v.ndim != 1 or (n is not None and v.shape[0] != n):
        raise DimensionMismatchError(f"expected a vector of length {n}, got shape {v.shape}")
    return v


def chebyshev(r, s) -> float:
    """``max_i |r_i - s_i|``."""
    r = _as_vector(r)
    s = _as_vector(s, r.shape[0])
    return float(np.max(np.abs(r - s)))


def chebyshev_tropical(r, s) -> float:
    """The same distance written as ``s⁻r ⊕ r⁻s``."""
    r = _as_vector(r)
    s = _as_vector(s, r.shape[0])
    rv, sv = TropVector(r), TropVector(s)
    d = product(vec_conjugate(sv), rv)
    e = product(vec_conjugate(rv), sv)
    return max(d.value, e.value)


def objective(inst: LocationInstance, x) -> float:
    """``max_k (ρ(r_k, x) + w_k)``."""
    x = _as_vector(x, inst.n)
    dist = np.max(np.abs(inst.points - x), axis=1)
    return float(np.max(dist + inst.addends))


def _require_caps(inst: LocationInstance) -> np.ndarray:
    if inst.caps is None:
        raise MissingCapsError("instance has no distance caps")
    return inst.caps


def constraint_slack(inst: LocationInstance, x) -> float:
    """``max_k (ρ(r_k, x) - d_k)``; positive exactly when some cap is broken."""
    caps = _require_caps(inst)
    x = _as_vector(x, inst.n)
    dist = np.max(np.abs(inst.points - x), axis=1)
    return float(np.max(dist - caps))


def is_feasible(inst: LocationInstance, x, atol: float = FEASIBILITY_ATOL) -> bool:
    return constraint_slack(inst, x) <= atol


def build_pq(inst: LocationInstance) -> Tuple[TropVector, TropVector]:
    """``p_i = max_k (r_ik + w_k)``, ``q_i = min_k (r_ik - w_k)``."""
    w = inst.addends[:, None]
    p = np.max(inst.points + w, axis=0)
    q = np.min(inst.points - w, axis=0)
    return TropVector(p), TropVector(q)


def build_pq_tropical(inst: LocationInstance) -> Tuple[TropVector, TropVector]:
    """``p = ⊕ w_k r_k`` and ``q⁻ = ⊕ w_k r_k⁻``, with ``q`` returned as a column."""
    p = TropVector.zeros(inst.n)
    q_conj = TropVector.zeros(inst.n, "row")
    for r, w in zip(inst.points, inst.addends):
        rv = TropVector(r)
        wk = TropScalar(w)
        p = vec_add(p, vec_scale(wk, rv))
        q_conj = vec_add(q_conj, vec_scale(wk, vec_conjugate(rv)))
    return p, vec_conjugate(q_conj)


def build_caps_pq(inst: LocationInstance) -> Tuple[np.ndarray, np.ndarray]:
    """``p1_i = max_k (r_ik - d_k)``, ``q1_i = min_k (r_ik + d_k)``.

    The feasible set is the box ``p1 <= x <= q1`` (empty when any
    ``p1_i > q1_i``).
    """
    d = _require_caps(inst)[:, None]
    return np.max(inst.points - d, axis=0), np.min(inst.points + d, axis=0)


def augmented_matrix(p: TropVector, q: TropVector) -> TropMatrix:
    """The order ``n+1`` matrix ``[[𝟘, q⁻], [p, 𝟘]]``."""
    n = len(p)
    q_conj = vec_conjugate(q)
    rows = [[ZERO, *q_conj]]
    for i in range(n):
        rows.append([p[i]] + [ZERO] * n)
    return TropMatrix(rows)


def lambda_tropical(p: TropVector, q: TropVector) -> float:
    """``(q⁻p)^(1/2)``."""
    return trop_pow(product(vec_conjugate(q), p), 0.5).value


def lambda_spectral(p: TropVector, q: TropVector) -> float:
    return spectral.eigenvalue(augmented_matrix(p, q)).value


def _closed_form_lambda(p: np.ndarray, q: np.ndarray) -> float:
    return float(np.max(p - q)) / 2.0


def _cross_check(lam: float, p: TropVector, q: TropVector) -> dict:
    routes = {
        "closed_form": lam,
        "tropical": lambda_tropical(p, q),
        "spectral": lambda_spectral(p, q),
    }
    scale = max(1.0, float(np.max(np.abs(p.to_array()))), float(np.max(np.abs(q.to_array()))))
    for name, value in routes.items():
        if abs(value - lam) > ROUTE_RTOL * scale:
            raise ConsistencyError(f"{name} optimal value {value!r} disagrees with {lam!r}")
    return routes


def sample_family(
    family: SolutionFamily, k: int = 5, return_alphas: bool = False
):
    """Deterministic sample of ``x(α)``.

    Uniform weights ``0, 1/(k-1), ..., 1`` (just ``1/2`` when ``k == 1``),
    followed by the ``2^n`` corner weights when ``k >= 2`` and ``n <= 4``.
    Repeated points are dropped, keeping the first occurrence.
    """
    if k < 1:
        raise ValueError("sample count must be positive")
    n = family.n
    if k == 1:
        alphas = [np.full(n, 0.5)]
    else:
        alphas = [np.full(n, a) for a in np.linspace(0.0, 1.0, k)]
        if n <= 4:
            alphas += [np.array(c, dtype=float) for c in itertools.product((0.0, 1.0), repeat=n)]
    seen = set()
    out_alphas, out_points = [], []
    for a in alphas:
        x = family.point(a)
        key = tuple(x.tolist())
        if key in seen:
            continue
        seen.add(key)
        out_alphas.append(a)
        out_points.append(x)
    if return_alphas:
        return out_points, out_alphas
    return out_points


def solve_unconstrained(inst: LocationInstance, n_samples: int = 5) -> SolveReport:
    p, q = build_pq(inst)
    pt, qt = build_pq_tropical(inst)
    if p != pt or q != qt:
        raise ConsistencyError("conventional and max-plus constructions of p, q differ")
    lam = _closed_form_lambda(p.to_array(), q.to_array())
    routes = _cross_check(lam, p, q)
    family = SolutionFamily(lam, p, q)
    points, alphas = sample_family(family, n_samples, return_alphas=True)
    return SolveReport(
        family=family,
        alphas=alphas,
        samples=points,
        objective_at_samples=[objective(inst, x) for x in points],
        exact=True,
        lambda_routes=routes,
    )


def solve_constrained(inst: LocationInstance, n_samples: int = 5) -> SolveReport:
    """Solve under ``ρ(r_k, x) <= d_k``.

    The returned ``lam`` is the optimum of the combined normalized problem:
    0 means the caps are compatible with the unconstrained optimum ``λ0``
    and every ``x(α)`` is a feasible minimizer; a positive value means the
    family holds approximate locations only.
    """
    caps = _require_caps(inst)
    p0t, q0t = build_pq(inst)
    p0, q0 = p0t.to_array(), q0t.to_array()
    lambda0 = _closed_form_lambda(p0, q0)
    p1, q1 = build_caps_pq(inst)
    p = np.maximum(p0 - lambda0, p1)
    q = np.minimum(q0 + lambda0, q1)
    pv, qv = TropVector(p), TropVector(q)

    # max-plus route: p = λ0⁻¹ p0 ⊕ p1, q⁻ = λ0⁻¹ q0⁻ ⊕ q1⁻
    inv0 = trop_inv(TropScalar(lambda0))
    pt = vec_add(vec_scale(inv0, p0t), TropVector(p1))
    qt_conj = vec_add(vec_scale(inv0, vec_conjugate(q0t)), vec_conjugate(TropVector(q1)))
    qt = vec_conjugate(qt_conj)
    if not (np.allclose(pt.to_array(), p, rtol=0, atol=1e-12 * max(1.0, np.max(np.abs(p))))
            and np.allclose(qt.to_array(), q, rtol=0, atol=1e-12 * max(1.0, np.max(np.abs(q))))):
        raise ConsistencyError("conventional and max-plus combined p, q differ")

    lam = _closed_form_lambda(p, q)
    routes = _cross_check(lam, pv, qv)
    family = SolutionFamily(lam, pv, qv)
    points, alphas = sample_family(family, n_samples, return_alphas=True)
    objectives = [objective(inst, x) for x in points]
    slack = [constraint_slack(inst, x) for x in points]
    return SolveReport(
        family=family,
        alphas=alphas,
        samples=points,
        objective_at_samples=objectives,
        exact=abs(lam) <= EXACT_ATOL,
        intermediate=ConstrainedIntermediate(p0, q0, lambda0, p1, q1),
        feasible_at_samples=[s <= FEASIBILITY_ATOL for s in slack],
        violation_at_samples=[max(0.0, s) for s in slack],
        excess_at_samples=[v - lambda0 for v in objectives],
        lambda_routes=routes,
    )


def solve(inst: LocationInstance, constrained: bool = False, n_samples: int = 5) -> SolveReport:
    if constrained:
        return solve_constrained(inst, n_samples)
    return solve_unconstrained(inst, n_samples)
