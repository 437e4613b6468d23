import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from dualruled import dual as dn
from dualruled.dual import Dual, ddiv, dlift
from dualruled.errors import DivisionByPureDual, DomainError, NonFiniteError

finite = st.floats(-1e3, 1e3, allow_nan=False, allow_infinity=False)
duals = st.builds(Dual, finite, finite)
# real part bounded away from zero for division
invertible = st.builds(
    Dual, st.one_of(st.floats(1e-3, 1e3), st.floats(-1e3, -1e-3)), finite
)


def close(a: Dual, b: Dual, tol):
    scale = 1.0 + max(abs(float(b.real)), abs(float(b.dual)))
    return abs(a.real - b.real) <= tol * scale and abs(a.dual - b.dual) <= tol * scale


# ---------------------------------------------------------------- oracles


def test_product_example():
    p = Dual(2, 3) * Dual(4, 5)
    assert (p.real, p.dual) == (8.0, 22.0)


def test_quotient_example():
    q = Dual(8, 22) / Dual(4, 5)
    assert q.real == 2.0 and q.dual == pytest.approx(3.0, abs=1e-15)


def test_eps_squared_is_zero():
    e = Dual(0.0, 1.0)
    p = e * e
    assert (p.real, p.dual) == (0.0, 0.0)


def test_lift_matches_closed_forms():
    a = Dual(0.3, 2.0)
    assert dn.sinh(a).dual == pytest.approx(2.0 * math.cosh(0.3), rel=1e-15)
    assert dn.cosh(a).dual == pytest.approx(2.0 * math.sinh(0.3), rel=1e-15)
    assert dn.tanh(a).dual == pytest.approx(2.0 / math.cosh(0.3) ** 2, rel=1e-15)
    assert dn.artanh(a).dual == pytest.approx(2.0 / (1 - 0.09), rel=1e-15)
    assert dn.sqrt(Dual(4.0, 1.0)).dual == pytest.approx(0.25, rel=1e-15)


def test_hyperbolic_identity_in_dual_arithmetic():
    a = Dual(0.7, -1.3)
    one = dn.cosh(a) * dn.cosh(a) - dn.sinh(a) * dn.sinh(a)
    assert one.real == pytest.approx(1.0, abs=1e-14)
    assert one.dual == pytest.approx(0.0, abs=1e-14)


def test_artanh_inverts_tanh():
    a = Dual(-0.4, 0.9)
    b = dn.artanh(dn.tanh(a))
    assert close(b, a, 1e-14)


def test_array_valued_duals_act_per_node():
    a = Dual(np.array([1.0, 2.0]), np.array([3.0, 4.0]))
    b = a * a
    np.testing.assert_array_equal(b.real, [1.0, 4.0])
    np.testing.assert_array_equal(b.dual, [6.0, 16.0])
    assert len(a) == 2 and a[1].real == 2.0


def test_ndarray_times_dual_dispatches_to_dual():
    a = Dual(np.array([1.0, 2.0]), np.array([1.0, 1.0]))
    out = np.array([2.0, 3.0]) * a
    assert isinstance(out, Dual)
    np.testing.assert_array_equal(out.dual, [2.0, 3.0])


# ---------------------------------------------------------------- errors


def test_division_by_pure_dual():
    with pytest.raises(DivisionByPureDual):
        Dual(1, 1) / Dual(0.0, 1.0)
    with pytest.raises(ZeroDivisionError):
        ddiv(Dual(1, 1), Dual(1e-13, 1.0))


def test_domain_errors():
    with pytest.raises(DomainError):
        dn.artanh(Dual(1.0, 0.0))
    with pytest.raises(DomainError):
        dn.sqrt(Dual(0.0, 1.0))
    with pytest.raises(DomainError, match="index 1"):
        dlift(np.log, lambda x: 1 / x, Dual(np.array([1.0, -1.0]), 0.0), domain=lambda x: x > 0)


def test_non_finite_rejected():
    with pytest.raises(NonFiniteError):
        Dual(float("nan"), 0.0)
    with pytest.raises(NonFiniteError):
        Dual(1.0, float("inf"))


# ---------------------------------------------------------------- properties


@given(duals, duals)
def test_commutative(a, b):
    assert close(a * b, b * a, 0) and close(a + b, b + a, 0)


@given(duals, duals, duals)
def test_associative(a, b, c):
    assert close((a * b) * c, a * (b * c), 1e-12 * (1 + abs(a.real) + abs(a.dual)) ** 2)
    assert close((a + b) + c, a + (b + c), 1e-12)


@given(duals, duals, duals)
def test_distributive(a, b, c):
    lhs, rhs = a * (b + c), a * b + a * c
    scale = (1 + abs(a.real) + abs(a.dual)) * (1 + abs(b.real) + abs(b.dual) + abs(c.real) + abs(c.dual))
    assert abs(lhs.real - rhs.real) <= 1e-13 * scale
    assert abs(lhs.dual - rhs.dual) <= 1e-13 * scale


@given(duals)
def test_pure_dual_square_vanishes(a):
    e = Dual(0.0, a.dual)
    assert (e * e).real == 0.0 and (e * e).dual == 0.0


@given(invertible)
def test_inverse_law(a):
    one = a * (1.0 / a)
    # the dual part cancels two terms of size |a*/a|
    tol = 1e-12 * (1 + abs(a.dual / a.real))
    assert abs(one.real - 1.0) <= 1e-15 and abs(one.dual) <= tol


@given(invertible, duals)
def test_division_undoes_multiplication(b, a):
    q = (a * b) / b
    scale = (1 + abs(a.real) + abs(a.dual)) * (1 + abs(b.dual / b.real))
    assert abs(q.real - a.real) <= 1e-12 * scale
    assert abs(q.dual - a.dual) <= 1e-12 * scale


@given(st.floats(-5, 5), st.floats(-10, 10))
def test_lift_chain_rule(x, d):
    """Lifting a composition equals composing lifts."""
    a = Dual(x, d)
    lhs = dn.sinh(dn.tanh(a))
    rhs = dlift(lambda t: np.sinh(np.tanh(t)), lambda t: np.cosh(np.tanh(t)) / np.cosh(t) ** 2, a)
    assert close(lhs, rhs, 1e-13)
