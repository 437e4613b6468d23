import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dualruled.dual import Dual
from dualruled.errors import (
    BadSpec,
    DegenerateSpeed,
    MixedCase,
    NonSpacelikeTangentImage,
    NonTimelikeDirector,
    NullPfaffian,
)
from dualruled.frenet import (
    CurveSpec,
    FourierCurve,
    HyperboloidCircle,
    PfaffCase,
    PointMoment,
    diff_periodic,
    fourier,
    frenet,
    grid,
    pfaff_case,
    pfaffian,
    sample_curve,
    samples_from_array,
    samples_to_array,
)
from dualruled.minkowski import DualVec3, dinner

from _specs import A, TWO_PI, hyperboloid, hyperboloid_point, wobbly


def stencil_gain(h):
    """Exact response of the 4th-order first-derivative stencil to sin/cos."""
    return (8 * np.sin(h) - np.sin(2 * h)) / (6 * h)


def frame_of(spec, n=1024):
    return frenet(sample_curve(spec, n), spec.period)


# ---------------------------------------------------------------- sampling


def test_first_sample_of_hyperboloid_circle():
    U = sample_curve(hyperboloid(), 64)
    np.testing.assert_allclose(U.real[0], [1.25, 0.75, 0.0], atol=1e-15)
    np.testing.assert_array_equal(U.dual, 0.0)


def test_point_moment_is_p_cross_e():
    p = np.array([0.3, -0.2, 0.5])
    U = sample_curve(hyperboloid_point(tuple(p)), 32)
    e = U.real
    expected = np.stack(
        [p[2] * e[:, 1] - p[1] * e[:, 2], p[2] * e[:, 0] - p[0] * e[:, 2], p[0] * e[:, 1] - p[1] * e[:, 0]],
        axis=-1,
    )
    np.testing.assert_allclose(U.dual, expected, atol=1e-15)


def test_samples_are_unit_timelike_lines():
    U = sample_curve(wobbly(), 128)
    UU = dinner(U, U)
    np.testing.assert_allclose(UU.real, -1.0, atol=1e-13)
    np.testing.assert_allclose(UU.dual, 0.0, atol=1e-13)


def test_array_round_trip():
    U = sample_curve(wobbly(), 64)
    V = samples_from_array(samples_to_array(U))
    np.testing.assert_array_equal(V.real, U.real)
    np.testing.assert_array_equal(V.dual, U.dual)


def test_grid_is_half_open():
    t = grid(TWO_PI, 16)
    assert t[0] == 0.0 and t[-1] == pytest.approx(TWO_PI * 15 / 16)


def test_too_few_samples():
    with pytest.raises(BadSpec):
        sample_curve(hyperboloid(), 8)


def test_non_positive_period():
    with pytest.raises(BadSpec):
        CurveSpec(-1.0, HyperboloidCircle(A))


def test_spacelike_director_rejected():
    spec = CurveSpec(TWO_PI, FourierCurve([fourier([0.5]), fourier([1.0]), fourier([], [0.1])]))
    with pytest.raises(NonTimelikeDirector) as info:
        sample_curve(spec, 32)
    assert info.value.node == 0


def test_fourier_needs_three_components():
    with pytest.raises(BadSpec):
        FourierCurve([fourier([1.0]), fourier([0.0])])


# ---------------------------------------------------------------- differences


def test_sin_derivative_error_matches_stencil_response():
    n = 256
    t = grid(TWO_PI, n)
    h = TWO_PI / n
    err = np.max(np.abs(diff_periodic(np.sin(t), TWO_PI) - np.cos(t)))
    exact = abs(1 - stencil_gain(h))
    assert err == pytest.approx(exact, rel=1e-6, abs=1e-15)
    # leading term h^4/30
    assert exact == pytest.approx(h**4 / 30, rel=1e-3)


def test_sin_derivative_below_1e8_at_512():
    t = grid(TWO_PI, 512)
    assert np.max(np.abs(diff_periodic(np.sin(t), TWO_PI) - np.cos(t))) < 1e-8


def test_fourth_order_convergence():
    errs = []
    for n in (64, 128, 256):
        t = grid(TWO_PI, n)
        y = np.exp(np.sin(t))
        errs.append(np.max(np.abs(diff_periodic(y, TWO_PI) - np.cos(t) * y)))
    for coarse, fine in zip(errs, errs[1:]):
        assert coarse / fine == pytest.approx(16, rel=0.1)


def test_second_derivative_of_cos():
    n = 256
    t = grid(TWO_PI, n)
    h = TWO_PI / n
    d2 = diff_periodic(np.cos(t), TWO_PI, order=2)
    gain = (-2 * np.cos(2 * h) + 32 * np.cos(h) - 30) / (12 * h * h)
    np.testing.assert_allclose(d2, gain * np.cos(t), atol=1e-13)


def test_constant_derivative_vanishes():
    assert np.max(np.abs(diff_periodic(np.full(32, 3.7), 1.0))) <= 1e-12


def test_dual_derivative_is_partwise():
    t = grid(TWO_PI, 64)
    d = diff_periodic(Dual(np.sin(t), np.cos(t)), TWO_PI)
    np.testing.assert_array_equal(d.real, diff_periodic(np.sin(t), TWO_PI))
    np.testing.assert_array_equal(d.dual, diff_periodic(np.cos(t), TWO_PI))


def test_bad_order():
    with pytest.raises(ValueError):
        diff_periodic(np.zeros(32), 1.0, order=3)


# ---------------------------------------------------------------- frame


def test_hyperboloid_curvatures():
    # e' has Lorentz length sinh a and the tangent image turns at cosh a
    f = frame_of(hyperboloid())
    np.testing.assert_allclose(f.kappa.real, 0.75, atol=1e-8)
    np.testing.assert_allclose(f.tau.real, -1.25, atol=1e-8)
    np.testing.assert_allclose(f.kappa.dual, 0.0, atol=1e-15)
    np.testing.assert_allclose(f.tau.dual, 0.0, atol=1e-15)


def test_cone_has_zero_dual_curvatures():
    f = frame_of(hyperboloid_point())
    np.testing.assert_allclose(f.kappa.dual, 0.0, atol=1e-8)
    np.testing.assert_allclose(f.tau.dual, 0.0, atol=1e-8)


@pytest.mark.parametrize("spec", [hyperboloid(), hyperboloid_point(), wobbly()], ids=["hyp", "cone", "wobbly"])
def test_frame_is_orthonormal(spec):
    f = frame_of(spec)
    expected = {(0, 0): -1.0, (1, 1): 1.0, (2, 2): 1.0}
    for i, X in enumerate(f.axes):
        for j, Y in enumerate(f.axes):
            g = dinner(X, Y)
            np.testing.assert_allclose(g.real, expected.get((i, j), 0.0), atol=1e-12)
            np.testing.assert_allclose(g.dual, 0.0, atol=1e-12)


def test_degenerate_speed():
    spec = CurveSpec(TWO_PI, FourierCurve([fourier([1.0]), fourier([0.0]), fourier([0.0])]))
    with pytest.raises(DegenerateSpeed):
        frame_of(spec, 32)


def test_timelike_tangent_image_rejected():
    # a closed unit timelike curve always has a spacelike tangent image, so
    # feed raw samples whose first component ramps
    t = grid(TWO_PI, 32)
    real = np.stack([2.0 + t, np.zeros_like(t), np.zeros_like(t)], axis=-1)
    with pytest.raises(NonSpacelikeTangentImage):
        frenet(DualVec3(real, np.zeros_like(real)), TWO_PI)

# ---------------------------------------------------------------- Pfaffian


def test_hyperboloid_pfaffian_is_timelike_constant():
    pf = pfaffian(frame_of(hyperboloid()))
    assert pf.case is PfaffCase.TIMELIKE
    np.testing.assert_allclose(pf.Omega.real, np.arctanh(-0.6), atol=1e-8)
    np.testing.assert_allclose(pf.Omega_prime[0], 0.0, atol=1e-8)


@pytest.mark.parametrize("spec", [hyperboloid(), wobbly()], ids=["hyp", "wobbly"])
def test_axis_is_unit_timelike_and_along_psi(spec):
    f = frame_of(spec)
    pf = pfaffian(f)
    CC = dinner(pf.C, pf.C)
    np.testing.assert_allclose(CC.real, -1.0, atol=1e-10)
    np.testing.assert_allclose(CC.dual, 0.0, atol=1e-10)
    # C is orthogonal to U2 like Psi
    g = dinner(pf.C, f.U2)
    np.testing.assert_allclose(g.real, 0.0, atol=1e-10)


def test_pfaff_case_classification():
    assert pfaff_case(Dual(np.array([2.0]), 0.0), Dual(np.array([1.0]), 0.0)) is PfaffCase.SPACELIKE
    assert pfaff_case(Dual(np.array([1.0]), 0.0), Dual(np.array([2.0]), 0.0)) is PfaffCase.TIMELIKE
    with pytest.raises(NullPfaffian):
        pfaff_case(Dual(np.array([1.0, 1.0]), 0.0), Dual(np.array([2.0, 1.0]), 0.0))
    with pytest.raises(MixedCase):
        pfaff_case(Dual(np.array([1.0, 3.0]), 0.0), Dual(np.array([2.0, 1.0]), 0.0))


@settings(max_examples=25)
@given(st.floats(0.2, 2.0))
def test_hyperboloid_family_curvatures(a):
    f = frenet(sample_curve(CurveSpec(TWO_PI, HyperboloidCircle(a)), 512), TWO_PI)
    np.testing.assert_allclose(f.kappa.real, np.sinh(a), rtol=1e-6)
    np.testing.assert_allclose(np.abs(f.tau.real), np.cosh(a), rtol=1e-6)
    assert pfaffian(f).case is PfaffCase.TIMELIKE


@settings(max_examples=25)
@given(st.tuples(*[st.floats(-1, 1)] * 3))
def test_point_moment_never_changes_real_frame(p):
    base = frame_of(hyperboloid(), 256)
    f = frame_of(hyperboloid(PointMoment(p)), 256)
    for X, Y in zip(base.axes, f.axes):
        np.testing.assert_allclose(X.real, Y.real, atol=1e-12)
