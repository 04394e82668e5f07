"""Dense vectors and matrices over R_max,+.

Storage is row-major tuples of :class:`~troploc.semiring.TropScalar`.
Vectors carry an orientation flag (``"col"`` or ``"row"``) that
:func:`product` checks, so that ``x⁻ A`` and ``A x`` cannot be mixed up.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import (
    DimensionMismatchError,
    NotSquareError,
    ReducibleError,
    ZeroEntryError,
)
from .semiring import (
    ONE,
    ZERO,
    TropScalar,
    trop,
    trop_add,
    trop_inv,
    trop_mul,
    trop_sum,
)

__all__ = [
    "TropVector",
    "TropMatrix",
    "vec_add",
    "vec_scale",
    "vec_conjugate",
    "mat_add",
    "mat_mul",
    "mat_scale",
    "mat_pow",
    "identity",
    "trace",
    "product",
    "is_irreducible",
    "check_irreducible",
    "unreachable_pair",
    "vec_allclose",
    "mat_allclose",
]


class TropVector:
    """Column (default) or row vector of tropical scalars."""

    __slots__ = ("entries", "orientation")

    def __init__(self, entries: Iterable, orientation: str = "col"):
        entries = tuple(trop(e) for e in entries)
        if len(entries) == 0:
            raise DimensionMismatchError("vector must have at least one entry")
        if orientation not in ("col", "row"):
            raise ValueError(f"orientation must be 'col' or 'row', got {orientation!r}")
        self.entries: Tuple[TropScalar, ...] = entries
        self.orientation = orientation

    @classmethod
    def zeros(cls, n: int, orientation: str = "col") -> "TropVector":
        return cls([ZERO] * n, orientation)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> TropScalar:
        return self.entries[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TropVector):
            return NotImplemented
        return self.orientation == other.orientation and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.entries, self.orientation))

    def __repr__(self) -> str:
        vals = ", ".join("𝟘" if e.is_zero else repr(e.value) for e in self.entries)
        return f"TropVector([{vals}], {self.orientation!r})"

    def __matmul__(self, other):
        return product(self, other)

    @property
    def T(self) -> "TropVector":
        return TropVector(self.entries, "row" if self.orientation == "col" else "col")

    @property
    def is_nonzero(self) -> bool:
        return any(not e.is_zero for e in self.entries)

    @property
    def is_positive(self) -> bool:
        """All entries differ from 𝟘."""
        return all(not e.is_zero for e in self.entries)

    def to_array(self) -> np.ndarray:
        return np.array([float(e) for e in self.entries])

    def to_list(self) -> List[Optional[float]]:
        return [e.value for e in self.entries]


class TropMatrix:
    """Rectangular matrix of tropical scalars."""

    __slots__ = ("rows", "shape")

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(trop(e) for e in row) for row in rows)
        if len(rows) == 0 or len(rows[0]) == 0:
            raise DimensionMismatchError("matrix must be at least 1×1")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatchError("ragged matrix rows")
        self.rows: Tuple[Tuple[TropScalar, ...], ...] = rows
        self.shape: Tuple[int, int] = (len(rows), width)

    @classmethod
    def from_array(cls, a) -> "TropMatrix":
        """Build from a 2D array-like; ``-inf`` and ``None`` become 𝟘."""
        return cls(a)

    def to_array(self) -> np.ndarray:
        return np.array([[float(e) for e in row] for row in self.rows])

    def to_list(self) -> List[List[Optional[float]]]:
        return [[e.value for e in row] for row in self.rows]

    def __getitem__(self, ij: Tuple[int, int]) -> TropScalar:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TropMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(
            ", ".join("𝟘" if e.is_zero else repr(e.value) for e in row) for row in self.rows
        )
        return f"TropMatrix([{body}])"

    def __matmul__(self, other):
        return product(self, other)

    @property
    def is_square(self) -> bool:
        return self.shape[0] == self.shape[1]

    @property
    def T(self) -> "TropMatrix":
        return TropMatrix(zip(*self.rows))

    def column(self, j: int) -> TropVector:
        return TropVector([row[j] for row in self.rows], "col")

    def row(self, i: int) -> TropVector:
        return TropVector(self.rows[i], "row")

    def columns(self) -> List[TropVector]:
        return [self.column(j) for j in range(self.shape[1])]


def _require_square(a: TropMatrix) -> int:
    if not a.is_square:
        raise NotSquareError(f"expected a square matrix, got shape {a.shape}")
    return a.shape[0]


def vec_add(x: TropVector, y: TropVector) -> TropVector:
    if len(x) != len(y) or x.orientation != y.orientation:
        raise DimensionMismatchError("vectors must have equal length and orientation")
    return TropVector((trop_add(a, b) for a, b in zip(x, y)), x.orientation)


def vec_scale(c: TropScalar, x: TropVector) -> TropVector:
    c = trop(c)
    return TropVector((trop_mul(c, e) for e in x), x.orientation)


def vec_conjugate(x: TropVector) -> TropVector:
    """``x⁻``: entrywise inverse with orientation flipped."""
    if not x.is_positive:
        raise ZeroEntryError("conjugate is only defined for vectors without 𝟘 entries")
    flipped = "row" if x.orientation == "col" else "col"
    return TropVector((trop_inv(e) for e in x), flipped)


def identity(n: int) -> TropMatrix:
    return TropMatrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])


def mat_add(a: TropMatrix, b: TropMatrix) -> TropMatrix:
    if a.shape != b.shape:
        raise DimensionMismatchError(f"shapes {a.shape} and {b.shape} differ")
    return TropMatrix(
        [[trop_add(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a.rows, b.rows)]
    )


def mat_scale(c: TropScalar, a: TropMatrix) -> TropMatrix:
    c = trop(c)
    return TropMatrix([[trop_mul(c, e) for e in row] for row in a.rows])


def mat_mul(a: TropMatrix, b: TropMatrix) -> TropMatrix:
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatchError(f"cannot multiply {a.shape} by {b.shape}")
    cols = tuple(zip(*b.rows))
    return TropMatrix(
        [[trop_sum(trop_mul(x, y) for x, y in zip(row, col)) for col in cols] for row in a.rows]
    )


def mat_pow(a: TropMatrix, p: int) -> TropMatrix:
    n = _require_square(a)
    if p < 0:
        raise ValueError("matrix power must be non-negative")
    result = identity(n)
    for _ in range(p):
        result = mat_mul(result, a)
    return result


def trace(a: TropMatrix) -> TropScalar:
    n = _require_square(a)
    return trop_sum(a.rows[i][i] for i in range(n))


def product(left, right):
    """Orientation-checked max-plus product.

    Supported pairs: matrix·matrix, matrix·column, row·matrix,
    row·column (a scalar) and column·row (an outer-product matrix).
    """
    if isinstance(left, TropMatrix) and isinstance(right, TropMatrix):
        return mat_mul(left, right)
    if isinstance(left, TropMatrix) and isinstance(right, TropVector):
        if right.orientation != "col":
            raise DimensionMismatchError("matrix can only multiply a column vector")
        if left.shape[1] != len(right):
            raise DimensionMismatchError(f"cannot multiply {left.shape} by length {len(right)}")
        return TropVector(
            (trop_sum(trop_mul(x, y) for x, y in zip(row, right)) for row in left.rows), "col"
        )
    if isinstance(left, TropVector) and isinstance(right, TropMatrix):
        if left.orientation != "row":
            raise DimensionMismatchError("only a row vector can multiply a matrix from the left")
        if right.shape[0] != len(left):
            raise DimensionMismatchError(f"cannot multiply length {len(left)} by {right.shape}")
        cols = zip(*right.rows)
        return TropVector(
            (trop_sum(trop_mul(x, y) for x, y in zip(left, col)) for col in cols), "row"
        )
    if isinstance(left, TropVector) and isinstance(right, TropVector):
        if len(left) != len(right):
            raise DimensionMismatchError("vector lengths differ")
        if left.orientation == "row" and right.orientation == "col":
            return trop_sum(trop_mul(x, y) for x, y in zip(left, right))
        if left.orientation == "col" and right.orientation == "row":
            return TropMatrix([[trop_mul(x, y) for y in right] for x in left])
        raise DimensionMismatchError(
            f"cannot multiply {left.orientation} vector by {right.orientation} vector"
        )
    return NotImplemented


def _reachable(adj: Sequence[Sequence[bool]], start: int) -> List[bool]:
    seen = [False] * len(adj)
    seen[start] = True
    queue = deque([start])
    while queue:
        i = queue.popleft()
        for j, edge in enumerate(adj[i]):
            if edge and not seen[j]:
                seen[j] = True
                queue.append(j)
    return seen


def _support(a: TropMatrix) -> List[List[bool]]:
    return [[not e.is_zero for e in row] for row in a.rows]


def unreachable_pair(a: TropMatrix) -> Optional[Tuple[int, int]]:
    """First ``(i, j)`` in row-major order with no path ``i -> j``, or ``None``."""
    n = _require_square(a)
    adj = _support(a)
    for i in range(n):
        seen = _reachable(adj, i)
        for j in range(n):
            if not seen[j]:
                return i, j
    return None


def is_irreducible(a: TropMatrix) -> bool:
    """Strong connectivity of the support digraph (edge i→j iff a_ij ≠ 𝟘).

    A 1×1 matrix is irreducible whatever its entry.
    """
    n = _require_square(a)
    if n == 1:
        return True
    adj = _support(a)
    if not all(_reachable(adj, 0)):
        return False
    transposed = [list(col) for col in zip(*adj)]
    return all(_reachable(transposed, 0))


def check_irreducible(a: TropMatrix) -> None:
    if not is_irreducible(a):
        pair = unreachable_pair(a)
        assert pair is not None
        raise ReducibleError(*pair)


def _close(a: TropScalar, b: TropScalar, atol: float) -> bool:
    if a.is_zero or b.is_zero:
        return a.is_zero and b.is_zero
    return math.isclose(a.value, b.value, rel_tol=0.0, abs_tol=atol)


def vec_allclose(x: TropVector, y: TropVector, atol: float = 1e-9) -> bool:
    """Entrywise equality up to ``atol``; 𝟘 only matches 𝟘."""
    return len(x) == len(y) and all(_close(a, b, atol) for a, b in zip(x, y))


def mat_allclose(a: TropMatrix, b: TropMatrix, atol: float = 1e-9) -> bool:
    return a.shape == b.shape and all(
        _close(x, y, atol) for ra, rb in zip(a.rows, b.rows) for x, y in zip(ra, rb)
    )
