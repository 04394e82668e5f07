"""scikit-learn style wrappers around the solvers."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .errors import MissingCapsError
from .location import LocationInstance, solve_constrained, solve_unconstrained
from .spectral import eigenbasis
from .validation import check_per_point, check_points, check_tropical_matrix


class ChebyshevCenter(TransformerMixin, BaseEstimator):
    """Minimax facility location under Chebyshev distance.

    Parameters
    ----------
    alpha : float or array-like, default=0.5
        Blend weight(s) selecting ``location_`` from the optimal family.
    constrained : {"auto", True, False}, default="auto"
        Whether to enforce the distance caps passed to :meth:`fit`.
        ``"auto"`` enforces them whenever they are given.
    n_samples : int, default=5
        Number of uniform blend weights used for ``samples_``.

    Attributes
    ----------
    lambda_ : float
        Optimal value. For constrained fits this is on the combined
        normalized scale; 0 means the caps are met exactly.
    lambda0_ : float
        Unconstrained optimum (equal to ``lambda_`` for unconstrained fits).
    p_, q_ : ndarray of shape (n_features,)
        Vectors generating the optimal family.
    location_ : ndarray of shape (n_features,)
        The member of the family chosen by ``alpha``.
    exact_ : bool
    report_ : SolveReport
    """

    def __init__(self, alpha=0.5, constrained="auto", n_samples=5):
        self.alpha = alpha
        self.constrained = constrained
        self.n_samples = n_samples

    def fit(self, X, y=None, addends=None, caps=None):
        """Fit to demand points ``X`` of shape ``(m, n)``.

        ``y`` is ignored. ``addends`` and ``caps`` are per-point arrays.
        """
        X = check_points(X)
        m = X.shape[0]
        w = check_per_point(addends, m, "addends")
        d = check_per_point(caps, m, "caps")
        use_caps = d is not None if self.constrained == "auto" else bool(self.constrained)
        if use_caps and d is None:
            raise MissingCapsError("constrained=True requires caps")
        inst = LocationInstance(X, w, d if use_caps else None)
        if use_caps:
            report = solve_constrained(inst, self.n_samples)
            self.lambda0_ = report.intermediate.lambda0
        else:
            report = solve_unconstrained(inst, self.n_samples)
            self.lambda0_ = report.lam
        self.instance_ = inst
        self.report_ = report
        self.lambda_ = report.lam
        self.p_ = report.family.p_array
        self.q_ = report.family.q_array
        self.exact_ = report.exact
        self.location_ = report.family.point(self.alpha)
        self.samples_ = np.array(report.samples)
        self.n_features_in_ = X.shape[1]
        return self

    def locations(self, alpha) -> np.ndarray:
        """Family member(s) for one weight vector or a stack of them."""
        check_is_fitted(self, "report_")
        a = np.asarray(alpha, dtype=float)
        if a.ndim <= 1:
            return self.report_.family.point(a)
        return np.array([self.report_.family.point(row) for row in a])

    def transform(self, X):
        """Chebyshev distance from each row of ``X`` to ``location_``."""
        check_is_fitted(self, "location_")
        X = check_points(X)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(
                f"X has {X.shape[1]} features, expected {self.n_features_in_}"
            )
        return np.max(np.abs(X - self.location_), axis=1)[:, None]

    def score(self, X, y=None, addends=None):
        """Negated minimax objective of ``location_`` for points ``X``."""
        dist = self.transform(X)[:, 0]
        w = check_per_point(addends, dist.shape[0], "addends")
        if w is not None:
            dist = dist + w
        return -float(np.max(dist))


class MaxPlusSpectrum(BaseEstimator):
    """Eigenvalue and eigenvectors of an irreducible max-plus matrix.

    ``fit`` takes the matrix itself (nested lists with ``None`` or an array
    with ``-inf`` for 𝟘).

    Attributes
    ----------
    eigenvalue_ : float
    basis_ : ndarray of shape (n, k)
        Independent eigenvectors as columns.
    """

    def fit(self, A, y=None):
        mat = check_tropical_matrix(A)
        res = eigenbasis(mat)
        self.eigenvalue_ = res.lam.value
        self.basis_ = np.column_stack([b.to_array() for b in res.basis])
        self.n_features_in_ = mat.shape[1]
        return self
