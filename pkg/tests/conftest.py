import numpy as np
import pytest

from troploc.linalg import TropMatrix


def np_maxplus(a, b):
    """Reference max-plus product on float arrays with -inf as zero."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return np.max(a[:, :, None] + b[None, :, :], axis=1)


def strongly_connected(support):
    """Transitive closure by repeated boolean squaring."""
    s = np.asarray(support, dtype=bool)
    n = s.shape[0]
    if n == 1:
        return True
    reach = s | np.eye(n, dtype=bool)
    for _ in range(n):
        reach = (reach.astype(int) @ reach.astype(int)) > 0
    return bool(reach.all())


def random_irreducible(rng, n, zero_prob=0.4, low=-10.0, high=10.0):
    while True:
        vals = rng.uniform(low, high, (n, n))
        mask = rng.random((n, n)) >= zero_prob
        if strongly_connected(mask) and (n > 1 or mask[0, 0]):
            vals[~mask] = -np.inf
            return TropMatrix(vals)


def random_arrow(rng, n, low=-10.0, high=10.0):
    vals = np.full((n, n), -np.inf)
    vals[0, 1:] = rng.uniform(low, high, n - 1)
    vals[1:, 0] = rng.uniform(low, high, n - 1)
    return vals


@pytest.fixture
def rng():
    return np.random.default_rng(20261014)
