"""Eigenvalue, eigenvectors and the extremal functional ``x⁻Ax``.

For an irreducible matrix ``A`` the eigenvalue is the ⊕ over ``m = 1..n``
of ``tr(A^m)^(1/m)``. Eigenvectors span the columns of ``A^×`` whose
diagonal entry equals 𝟙, after dependent columns are dropped.

The functional ``phi(A, x) = x⁻ A x`` is bounded below by the eigenvalue
on positive vectors, and its set of minimizers is closed under the
operations implemented by :func:`xa_closure_ops`, :func:`uniform_blend`
and (for arrow-shaped matrices only) :func:`blend_members`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from .errors import (
    BadAlphaError,
    DegenerateSpectrumError,
    DimensionMismatchError,
    HubMismatchError,
    NotArrowError,
    NotMinimizerError,
    ZeroEntryError,
)
from .linalg import (
    TropMatrix,
    TropVector,
    check_irreducible,
    mat_add,
    mat_mul,
    mat_scale,
    product,
    trace,
    vec_add,
    vec_allclose,
    vec_conjugate,
    vec_scale,
)
from .semiring import (
    ONE,
    ZERO,
    TropScalar,
    trop,
    trop_inv,
    trop_mul,
    trop_pow,
    trop_root,
    trop_sum,
)

__all__ = [
    "EIGEN_ATOL",
    "MEMBER_ATOL",
    "EigenResult",
    "ArrowMatrix",
    "eigenvalue",
    "kleene_plus",
    "eigenbasis",
    "is_dependent",
    "phi",
    "is_member",
    "minimize_phi",
    "coordinate_blend",
    "uniform_blend",
    "blend_members",
    "xa_closure_ops",
]

# An A^× diagonal entry counts as 𝟙 when within this distance of 0.
EIGEN_ATOL = 1e-9
# |phi(A, x) - λ| bound for membership in the minimizer set.
MEMBER_ATOL = 1e-9


@dataclass(frozen=True)
class EigenResult:
    lam: TropScalar
    basis: Tuple[TropVector, ...]


@dataclass(frozen=True)
class ArrowMatrix:
    """Matrix with 𝟘 everywhere except its first row and first column.

    ``a`` holds ``a_21..a_n1`` (first column below the corner) and
    ``b_conj`` holds ``a_12..a_1n`` (first row right of the corner). All of
    them must be finite.
    """

    a: TropVector
    b_conj: TropVector

    def __post_init__(self):
        if len(self.a) != len(self.b_conj):
            raise DimensionMismatchError("arrow column and row tails must have equal length")
        if not (self.a.is_positive and self.b_conj.is_positive):
            raise ZeroEntryError("arrow matrix tails must not contain 𝟘")

    @property
    def n(self) -> int:
        return len(self.a) + 1

    def to_matrix(self) -> TropMatrix:
        n = self.n
        rows = [[ZERO] * n for _ in range(n)]
        for j in range(1, n):
            rows[0][j] = self.b_conj[j - 1]
            rows[j][0] = self.a[j - 1]
        return TropMatrix(rows)

    def phi(self, x: TropVector) -> TropScalar:
        """``x⁻Ax = x_1 (x⁻a) ⊕ x_1⁻¹ (b⁻x)``.

        The hub factors cancel to ``x⁻a ⊕ b⁻x`` when ``x_1 = 𝟙``.
        """
        if len(x) != self.n:
            raise DimensionMismatchError("vector length does not match matrix order")
        hub = x[0]
        tail = TropVector(x.entries[1:], "col")
        into_hub = trop_mul(hub, product(vec_conjugate(tail), self.a))
        out_of_hub = trop_mul(trop_inv(hub), product(self.b_conj, tail))
        return trop_sum([into_hub, out_of_hub])


MatrixLike = Union[TropMatrix, ArrowMatrix]


def _as_matrix(a: MatrixLike) -> TropMatrix:
    return a.to_matrix() if isinstance(a, ArrowMatrix) else a


def eigenvalue(a: MatrixLike) -> TropScalar:
    """``λ = ⊕_{m=1..n} tr(A^m)^(1/m)`` for irreducible ``A``."""
    a = _as_matrix(a)
    check_irreducible(a)
    n = a.shape[0]
    terms = []
    power = a
    for m in range(1, n + 1):
        if m > 1:
            power = mat_mul(power, a)
        terms.append(trop_root(trace(power), m))
    lam = trop_sum(terms)
    if lam.is_zero:
        raise DegenerateSpectrumError("every cycle of the matrix has weight 𝟘")
    return lam


def kleene_plus(a: TropMatrix, lam: TropScalar) -> TropMatrix:
    """``A^× = λ⁻¹A ⊕ (λ⁻¹A)² ⊕ ... ⊕ (λ⁻¹A)ⁿ``."""
    n = a.shape[0]
    scaled = mat_scale(trop_inv(lam), a)
    acc = scaled
    power = scaled
    for _ in range(1, n):
        power = mat_mul(power, scaled)
        acc = mat_add(acc, power)
    return acc


def is_dependent(y: TropVector, basis: Sequence[TropVector], atol: float = EIGEN_ATOL) -> bool:
    """Whether ``y`` is a max-plus combination of ``basis``.

    Each coefficient is taken as the largest ``c_j`` with ``c_j x_j <= y``;
    ``y`` is dependent iff the resulting combination reproduces it.
    """
    if not y.is_positive or not all(x.is_positive for x in basis):
        raise ZeroEntryError("dependence test requires vectors without 𝟘 entries")
    if any(len(x) != len(y) for x in basis):
        raise DimensionMismatchError("basis vectors must match the length of y")
    if not basis:
        return False
    combo = TropVector.zeros(len(y), y.orientation)
    for x in basis:
        c = TropScalar(min(yi.value - xi.value for yi, xi in zip(y, x)))
        combo = vec_add(combo, TropVector(vec_scale(c, x), y.orientation))
    return vec_allclose(combo, y, atol)


def eigenbasis(a: MatrixLike) -> EigenResult:
    """Eigenvalue plus an independent generating set of eigenvectors.

    Columns of ``A^×`` with diagonal 𝟙 are scanned left to right and kept
    unless dependent on the columns already kept.
    """
    a = _as_matrix(a)
    lam = eigenvalue(a)
    ax = kleene_plus(a, lam)
    n = a.shape[0]
    kept: List[TropVector] = []
    for i in range(n):
        d = ax[i, i]
        if d.is_zero or abs(d.value) > EIGEN_ATOL:
            continue
        col = ax.column(i)
        if not kept or not is_dependent(col, kept):
            kept.append(col)
    if not kept:
        raise DegenerateSpectrumError("no column of A^× has a unit diagonal entry")
    return EigenResult(lam, tuple(kept))


def phi(a: MatrixLike, x: TropVector) -> TropScalar:
    """``x⁻ A x`` for a positive column vector ``x``."""
    if isinstance(a, ArrowMatrix):
        return a.phi(x)
    if a.shape[0] != len(x) or a.shape[1] != len(x):
        raise DimensionMismatchError("vector length does not match matrix shape")
    return product(vec_conjugate(x), product(a, x))


def is_member(a: MatrixLike, x: TropVector, lam: TropScalar = None, atol: float = MEMBER_ATOL) -> bool:
    """Whether ``x`` minimizes ``phi(A, .)``, i.e. ``|phi(A, x) - λ| <= atol``."""
    if lam is None:
        lam = eigenvalue(a)
    value = phi(a, x)
    return not value.is_zero and abs(value.value - lam.value) <= atol


def minimize_phi(a: MatrixLike) -> Tuple[TropScalar, TropVector, TropVector]:
    """Minimum of ``x⁻Ax`` and two vectors attaining it.

    Returns ``(λ, u, (v⁻)ᵀ)`` where ``u`` and ``v`` are the first basis
    eigenvectors of ``A`` and ``Aᵀ`` respectively.
    """
    m = _as_matrix(a)
    eig = eigenbasis(m)
    eig_t = eigenbasis(m.T)
    u = eig.basis[0]
    v = eig_t.basis[0]
    return eig.lam, u, vec_conjugate(v).T


def _check_alpha(alpha: float) -> None:
    if not 0.0 <= alpha <= 1.0:
        raise BadAlphaError(f"blend weight {alpha!r} outside [0, 1]")


def coordinate_blend(x: TropVector, y: TropVector, alphas: Sequence[float]) -> TropVector:
    """``z_i = x_i^α_i ⊗ y_i^(1-α_i)`` with no membership checks."""
    if not (len(x) == len(y) == len(alphas)):
        raise DimensionMismatchError("x, y and alphas must have equal length")
    if not (x.is_positive and y.is_positive):
        raise ZeroEntryError("blend requires vectors without 𝟘 entries")
    for al in alphas:
        _check_alpha(al)
    return TropVector(
        (trop_mul(trop_pow(xi, al), trop_pow(yi, 1.0 - al)) for xi, yi, al in zip(x, y, alphas)),
        x.orientation,
    )


def _members_or_raise(a: MatrixLike, x: TropVector, y: TropVector) -> TropScalar:
    lam = eigenvalue(a)
    for name, vec in (("x", x), ("y", y)):
        if not is_member(a, vec, lam):
            raise NotMinimizerError(f"{name} does not minimize x⁻Ax")
    return lam


def uniform_blend(a: MatrixLike, x: TropVector, y: TropVector, alpha: float) -> TropVector:
    """Blend two minimizers with one weight for every coordinate.

    Valid for any irreducible matrix.
    """
    _check_alpha(alpha)
    _members_or_raise(a, x, y)
    return coordinate_blend(x, y, [alpha] * len(x))


def blend_members(
    a: ArrowMatrix, x: TropVector, y: TropVector, alphas: Sequence[float]
) -> TropVector:
    """Blend two minimizers with an independent weight per coordinate.

    The result is again a minimizer only for arrow matrices and only when
    ``x`` and ``y`` share the hub coordinate ``x_1 = y_1``; anything else is
    refused.
    """
    if not isinstance(a, ArrowMatrix):
        raise NotArrowError("per-coordinate blending requires an ArrowMatrix")
    if not (x[0].is_zero or y[0].is_zero) and abs(x[0].value - y[0].value) > MEMBER_ATOL:
        raise HubMismatchError("x and y must agree in the first coordinate")
    if len(alphas) != len(x):
        raise DimensionMismatchError("need one blend weight per coordinate")
    for al in alphas:
        _check_alpha(al)
    _members_or_raise(a, x, y)
    return coordinate_blend(x, y, alphas)


def xa_closure_ops(
    x: TropVector, y: TropVector, c: TropScalar = ONE
) -> Tuple[TropVector, TropVector, TropVector]:
    """``(c x, x ⊕ y, (x⁻ ⊕ y⁻)⁻)``."""
    if not (x.is_positive and y.is_positive):
        raise ZeroEntryError("closure operations require vectors without 𝟘 entries")
    c = trop(c)
    if c.is_zero:
        raise ZeroEntryError("scaling by 𝟘 leaves the set of positive vectors")
    scaled = vec_scale(c, x)
    joined = vec_add(x, y)
    met = vec_conjugate(vec_add(vec_conjugate(x), vec_conjugate(y)))
    return scaled, joined, met
