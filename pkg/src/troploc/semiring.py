"""Scalars of the max-plus semifield.

The zero element is a tagged value (``TropScalar(None)``) rather than the
float ``-inf``. Every finite scalar holds an ordinary finite float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Real
from typing import Optional, Union

from .errors import InvertZeroError, TropicalError, ZeroPowerError

__all__ = [
    "TropScalar",
    "ZERO",
    "ONE",
    "trop",
    "trop_add",
    "trop_mul",
    "trop_inv",
    "trop_pow",
    "trop_root",
    "trop_leq",
    "trop_sum",
    "trop_prod",
]


@dataclass(frozen=True)
class TropScalar:
    """Element of R_max,+ ; ``value is None`` encodes the zero element."""

    value: Optional[float]

    def __post_init__(self):
        if self.value is not None:
            v = float(self.value)
            if not math.isfinite(v):
                raise TropicalError(
                    f"finite scalar must hold a finite float, got {self.value!r}"
                )
            object.__setattr__(self, "value", v)

    @property
    def is_zero(self) -> bool:
        return self.value is None

    def __float__(self) -> float:
        return -math.inf if self.value is None else self.value

    def __repr__(self) -> str:
        return "TropScalar(𝟘)" if self.value is None else f"TropScalar({self.value!r})"

    def __le__(self, other: "TropScalar") -> bool:
        return trop_leq(self, trop(other))

    def __ge__(self, other: "TropScalar") -> bool:
        return trop_leq(trop(other), self)

    def __lt__(self, other: "TropScalar") -> bool:
        return self <= other and self != trop(other)

    def __gt__(self, other: "TropScalar") -> bool:
        return self >= other and self != trop(other)


ZERO = TropScalar(None)
ONE = TropScalar(0.0)

ScalarLike = Union[TropScalar, Real, None]


def trop(x: ScalarLike) -> TropScalar:
    """Coerce ``x`` to a :class:`TropScalar`.

    ``None`` and ``-inf`` both map to the zero element; NaN and ``+inf`` are
    rejected.
    """
    if isinstance(x, TropScalar):
        return x
    if x is None:
        return ZERO
    v = float(x)
    if v == -math.inf:
        return ZERO
    return TropScalar(v)


def trop_add(a: TropScalar, b: TropScalar) -> TropScalar:
    if a.value is None:
        return b
    if b.value is None:
        return a
    return a if a.value >= b.value else b


def trop_mul(a: TropScalar, b: TropScalar) -> TropScalar:
    if a.value is None or b.value is None:
        return ZERO
    return TropScalar(a.value + b.value)


def trop_inv(a: TropScalar) -> TropScalar:
    if a.value is None:
        raise InvertZeroError("the zero element has no inverse")
    return TropScalar(-a.value + 0.0)


def trop_pow(a: TropScalar, e: float) -> TropScalar:
    """Real power ``a^e``, which is ``e * a`` in conventional arithmetic.

    ``𝟘^e`` is only defined for ``e > 0``.
    """
    if a.value is None:
        if e > 0:
            return ZERO
        raise ZeroPowerError(f"𝟘 raised to non-positive exponent {e!r}")
    if e == 0:
        return ONE
    return TropScalar(e * a.value)


def trop_root(a: TropScalar, m: int) -> TropScalar:
    """``a^(1/m)`` computed as ``a / m`` to avoid rounding ``1/m`` first."""
    if m <= 0:
        raise ValueError("root order must be positive")
    if a.value is None:
        return ZERO
    return TropScalar(a.value / m)


def trop_leq(a: TropScalar, b: TropScalar) -> bool:
    return trop_add(a, b) == b


def trop_sum(items) -> TropScalar:
    """⊕ over an iterable; empty sum is 𝟘."""
    acc = ZERO
    for item in items:
        acc = trop_add(acc, item)
    return acc


def trop_prod(items) -> TropScalar:
    """⊗ over an iterable; empty product is 𝟙."""
    acc = ONE
    for item in items:
        acc = trop_mul(acc, item)
    return acc
