"""Input checks shared by the estimator API and the CLI."""

from __future__ import annotations

import math
from typing import Optional

import numpy as np
from sklearn.utils.validation import check_array

from .errors import DimensionMismatchError
from .linalg import TropMatrix


def check_points(X) -> np.ndarray:
    """Return ``X`` as a finite float ``(m, n)`` array; 1D input is one column."""
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X[:, None]
    return check_array(X, dtype=float, ensure_2d=True, ensure_min_samples=1)


def check_per_point(values, m: int, name: str) -> Optional[np.ndarray]:
    """Validate an optional length-``m`` vector of finite reals."""
    if values is None:
        return None
    arr = np.asarray(values, dtype=float)
    if arr.ndim == 0:
        arr = np.full(m, float(arr))
    if arr.shape != (m,):
        raise DimensionMismatchError(f"{name} must have length {m}, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must be finite")
    return arr


def check_tropical_matrix(a) -> TropMatrix:
    """Build a :class:`TropMatrix` from nested lists or an array.

    ``None`` and ``-inf`` encode 𝟘. NaN, ``+inf`` and ragged rows are
    rejected.
    """
    if isinstance(a, TropMatrix):
        return a
    if isinstance(a, np.ndarray):
        if a.ndim != 2:
            raise DimensionMismatchError("matrix must be two-dimensional")
        a = a.tolist()
    rows = list(a)
    if not rows or not all(isinstance(r, (list, tuple)) for r in rows):
        raise DimensionMismatchError("matrix must be a non-empty list of rows")
    for row in rows:
        for e in row:
            if e is None:
                continue
            if isinstance(e, bool) or not isinstance(e, (int, float)):
                raise ValueError(f"matrix entry {e!r} is neither a number nor null")
            if math.isnan(e) or e == math.inf:
                raise ValueError(f"matrix entry {e!r} is not allowed")
    return TropMatrix(rows)
