import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dualruled import dual as dn
from dualruled.dual import Dual
from dualruled.errors import DrallSingularity, FrameMismatch, VaryingOmega
from dualruled.frenet import PfaffCase, diff_periodic, frenet, grid, pfaffian, sample_curve
from dualruled.invariants import (
    CurvatureIntegrals,
    FrameVector,
    angle_C_closed,
    angle_C_expanded,
    axis_invariants,
    closed_integral,
    constant_angle,
    frame_dralls,
    pfaff_axis_invariants,
    steiner,
    unit_axis,
)
from dualruled.minkowski import dinner

from _specs import TWO_PI, hyperboloid, hyperboloid_base, hyperboloid_point, wobbly

PI = np.pi


def frame_of(spec, n=1024):
    return frenet(sample_curve(spec, n), spec.period)


def fd_drall(X, period):
    """Drall from <X',X'> = p^2 + 2 eps p p*, i.e. p*/p = dual / (2 real)."""
    g = dinner(diff_periodic(X, period), diff_periodic(X, period))
    return np.asarray(g.dual) / (2 * np.asarray(g.real))


# ---------------------------------------------------------------- integrals


def test_closed_integral_of_trig_polynomial_is_exact():
    t = grid(TWO_PI, 32)
    assert closed_integral(3 + np.cos(t) + np.sin(5 * t) ** 2, TWO_PI) == pytest.approx(7 * PI, abs=1e-13)


def test_closed_integral_of_dual():
    t = grid(1.0, 16)
    I = closed_integral(Dual(np.ones_like(t), 2 * np.ones_like(t)), 1.0)
    assert (I.real, I.dual) == pytest.approx((1.0, 2.0))


def test_hyperboloid_curvature_integrals():
    I = CurvatureIntegrals.of(*frame_of(hyperboloid()).curvatures, TWO_PI)
    assert I.k1 == pytest.approx(1.5 * PI, abs=1e-8)
    assert I.k2 == pytest.approx(-2.5 * PI, abs=1e-8)
    assert I.k1s == 0.0 and I.k2s == 0.0


def test_steiner_vector_of_hyperboloid():
    D = steiner(frame_of(hyperboloid()))
    assert D.c1.real == pytest.approx(-2.5 * PI, abs=1e-8)
    assert D.c2.real == 0.0
    assert D.c3.real == pytest.approx(-1.5 * PI, abs=1e-8)


# ---------------------------------------------------------------- frame axes


def test_angles_of_frame_axes_on_hyperboloid():
    f = frame_of(hyperboloid())
    assert axis_invariants(f, "U1").lam == pytest.approx(-2.5 * PI, abs=1e-8)
    assert axis_invariants(f, "U2").lam == 0.0
    assert axis_invariants(f, "U3").lam == pytest.approx(1.5 * PI, abs=1e-8)


@pytest.mark.parametrize("axis", ["U1", "U2", "U3"])
def test_cone_has_zero_pitch(axis):
    tri = axis_invariants(frame_of(hyperboloid_point()), axis, with_drall=False)
    assert abs(tri.L) < 1e-12 and abs(tri.L_from_angle) < 1e-12


@pytest.mark.parametrize("axis", ["U1", "U2", "U3"])
def test_pitch_is_minus_dual_angle(axis):
    tri = axis_invariants(frame_of(hyperboloid_base()), axis, with_drall=False)
    assert tri.L == pytest.approx(tri.L_from_angle, abs=1e-12)


def test_nontrivial_pitch_on_base_curve():
    tri = axis_invariants(frame_of(hyperboloid_base()), "U1", with_drall=False)
    assert abs(tri.L) > 0.1


@pytest.mark.parametrize("axis", ["U1", "U3"])
def test_frame_drall_matches_finite_differences(axis):
    f = frame_of(wobbly(), 2048)
    tri = axis_invariants(f, axis)
    X = {"U1": f.U1, "U3": f.U3}[axis]
    np.testing.assert_allclose(tri.drall, fd_drall(X, TWO_PI), atol=1e-6)


def test_drall_singularity_reports_node():
    # k1 = 0 at node 1 and k2^2 = k1^2 at node 0
    d = frame_dralls(Dual(np.array([1.0, 0.0]), np.array([0.1, 0.2])), Dual(np.ones(2), np.zeros(2)))
    with pytest.raises(DrallSingularity) as info:
        d[0]()
    assert info.value.node == 1
    with pytest.raises(DrallSingularity):
        d[1]()


def test_with_drall_false_skips():
    assert axis_invariants(frame_of(hyperboloid()), "U1", with_drall=False).drall is None


# ---------------------------------------------------------------- frame vectors


def test_frame_mismatch():
    with pytest.raises(FrameMismatch):
        unit_axis("U", 1).dot(unit_axis("V", 1))


def test_unit_axes_are_orthonormal():
    g = [[unit_axis("U", i).dot(unit_axis("U", j)).real for j in (1, 2, 3)] for i in (1, 2, 3)]
    np.testing.assert_array_equal(g, np.diag([-1.0, 1.0, 1.0]))


def test_frame_vector_realises_on_frame():
    f = frame_of(wobbly(), 64)
    X = FrameVector("U", 2.0, 0.0, 1.0).ambient(f)
    np.testing.assert_allclose(X.real, 2 * f.U1.real + f.U3.real)


@given(st.floats(-2, 2), st.floats(-2, 2), st.floats(-2, 2), st.floats(-2, 2))
def test_v_to_u_change_preserves_inner_product(a, b, phi, phis):
    Phi = Dual(phi, phis)
    X, Y = FrameVector("V", a, 1.0, b), FrameVector("V", b, -0.5, a)
    lhs = X.dot(Y)
    rhs = X.to_u_frame(Phi).dot(Y.to_u_frame(Phi))
    scale = 1 + np.cosh(phi) ** 2 * (1 + abs(phis)) * 16
    assert abs(lhs.real - rhs.real) <= 1e-12 * scale
    assert abs(lhs.dual - rhs.dual) <= 1e-12 * scale


# ---------------------------------------------------------------- Pfaffian axis


def test_pfaffian_axis_of_hyperboloid():
    f = frame_of(hyperboloid())
    pf = pfaffian(f)
    # the axis of a one-sheet circle hyperboloid is the time axis
    np.testing.assert_allclose(pf.C.real, np.tile([1.0, 0.0, 0.0], (f.n, 1)), atol=1e-10)
    C = pfaff_axis_invariants(f, pf)
    # cosh w = 1.25, sinh w = -0.75: 1.25 (-2.5 pi) + 0.75 (1.5 pi)
    assert C.lam == pytest.approx(-2 * PI, abs=1e-8)
    assert C.L == 0.0
    assert np.all(np.isnan(C.drall))


def test_pfaffian_axis_through_fixed_point():
    f = frame_of(hyperboloid_point((0.3, -0.2, 0.5)))
    pf = pfaffian(f)
    # the axis line is the time axis shifted through p: p ^ (1, 0, 0)
    np.testing.assert_allclose(pf.C.dual, np.tile([0.0, 0.5, 0.2], (f.n, 1)), atol=1e-10)


def test_varying_dual_angle_is_rejected():
    # same director as the hyperboloid, but omega* varies with the base curve
    f = frame_of(hyperboloid_base())
    with pytest.raises(VaryingOmega):
        pfaff_axis_invariants(f, pfaffian(f))


def test_axis_angle_forms_agree():
    f = frame_of(hyperboloid_point())
    C = pfaff_axis_invariants(f, pfaffian(f))
    for key in ("Lambda", "Lambda_contracted"):
        assert C.expanded[key].real == pytest.approx(C.lam, abs=1e-8)
    assert C.expanded["L"] == pytest.approx(C.L, abs=1e-12)


def test_cone_law_for_axis():
    f = frame_of(hyperboloid_point())
    C = pfaff_axis_invariants(f, pfaffian(f))
    assert C.L == pytest.approx(C.L_from_angle, abs=1e-12)


def test_varying_omega_on_wobbly_curve():
    f = frame_of(wobbly())
    pf = pfaffian(f)
    assert pf.case is PfaffCase.TIMELIKE
    with pytest.raises(VaryingOmega):
        pfaff_axis_invariants(f, pf)


def test_constant_angle_scalar_passthrough():
    assert constant_angle(Dual(0.3, 0.1)).real == 0.3


@settings(max_examples=50)
@given(st.floats(-1.5, 1.5), st.floats(-1, 1), st.sampled_from(list(PfaffCase)))
def test_axis_angle_closed_matches_expanded(w, ws, case):
    I = CurvatureIntegrals(1.3, -2.1, 0.4, 0.7)
    Omega = Dual(w, ws)
    D = FrameVector("U", I.tau, dn.ZERO, -I.kappa)
    Lam1 = -D.dot(unit_axis("U", 1))
    Lam3 = -D.dot(unit_axis("U", 3))
    a, b = angle_C_closed(case, Omega, I), angle_C_expanded(case, Omega, Lam1, Lam3)
    assert a.real == pytest.approx(b.real, abs=1e-12)
    assert a.dual == pytest.approx(b.dual, abs=1e-12)
