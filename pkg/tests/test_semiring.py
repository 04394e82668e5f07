import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from troploc.errors import InvertZeroError, TropicalError, ZeroPowerError
from troploc.semiring import (
    ONE,
    ZERO,
    TropScalar,
    trop,
    trop_add,
    trop_inv,
    trop_leq,
    trop_mul,
    trop_pow,
    trop_root,
    trop_sum,
)

# Quarter-integers keep every sum exact so algebraic laws hold bit for bit.
finite = st.integers(-4000, 4000).map(lambda k: TropScalar(k / 4))
scalars = st.one_of(st.just(ZERO), finite)


def T(x):
    return trop(x)


class TestExamples:
    def test_add(self):
        assert trop_add(T(2), T(3)) == T(3)
        assert trop_add(ZERO, T(5)) == T(5)
        assert trop_add(T(4), T(4)) == T(4)

    def test_mul(self):
        assert trop_mul(T(2), T(3)) == T(5)
        assert trop_mul(ZERO, T(7)) == ZERO
        assert trop_mul(ONE, T(-1.5)) == T(-1.5)

    def test_inv(self):
        assert trop_inv(T(3)) == T(-3)
        assert trop_inv(T(0)) == ONE
        with pytest.raises(InvertZeroError):
            trop_inv(ZERO)

    def test_pow(self):
        assert trop_pow(T(4), 0.5) == T(2)
        assert trop_pow(T(-7.25), 0) == ONE
        assert trop_pow(ZERO, 3) == ZERO
        with pytest.raises(ZeroPowerError):
            trop_pow(ZERO, 0)
        with pytest.raises(ZeroPowerError):
            trop_pow(ZERO, -1)

    def test_leq(self):
        assert trop_leq(T(2), T(3))
        assert trop_leq(ZERO, T(-1e300))
        assert not trop_leq(T(3), T(2))

    def test_root_divides(self):
        assert trop_root(T(10), 4) == T(2.5)
        assert trop_root(ZERO, 2) == ZERO


class TestRepresentation:
    def test_minus_inf_and_none_are_zero(self):
        assert trop(None) == ZERO
        assert trop(-math.inf) == ZERO
        assert ZERO.is_zero and not ONE.is_zero
        assert float(ZERO) == -math.inf

    @pytest.mark.parametrize("bad", [math.nan, math.inf])
    def test_rejects_non_finite(self, bad):
        with pytest.raises(TropicalError):
            trop(bad)

    def test_empty_sum_is_zero(self):
        assert trop_sum([]) == ZERO


@given(scalars)
def test_idempotent(a):
    assert trop_add(a, a) == a


@given(scalars, scalars, scalars)
def test_commutative_associative_distributive(a, b, c):
    assert trop_add(a, b) == trop_add(b, a)
    assert trop_mul(a, b) == trop_mul(b, a)
    assert trop_add(trop_add(a, b), c) == trop_add(a, trop_add(b, c))
    assert trop_mul(trop_mul(a, b), c) == trop_mul(a, trop_mul(b, c))
    assert trop_mul(a, trop_add(b, c)) == trop_add(trop_mul(a, b), trop_mul(a, c))


@given(finite, finite, st.floats(0, 50))
def test_binomial_identity(x, y, alpha):
    lhs = trop_pow(trop_add(x, y), alpha)
    rhs = trop_add(trop_pow(x, alpha), trop_pow(y, alpha))
    assert math.isclose(lhs.value, rhs.value, abs_tol=1e-9)


@given(scalars, scalars, scalars)
def test_isotone(a, b, c):
    if trop_leq(a, b):
        assert trop_leq(trop_add(a, c), trop_add(b, c))
        assert trop_leq(trop_mul(a, c), trop_mul(b, c))


@given(finite)
def test_inverse_law(a):
    assert trop_mul(a, trop_inv(a)) == ONE


@given(scalars, scalars)
def test_order_matches_reals(a, b):
    assert trop_leq(a, b) == (float(a) <= float(b))
