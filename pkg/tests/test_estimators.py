import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from dualruled.estimators import ParallelRuledSurface, RuledSurfaceInvariants
from dualruled.frenet import sample_curve, samples_to_array

from _specs import hyperboloid, hyperboloid_point, wobbly


def samples(spec, n=512):
    return samples_to_array(sample_curve(spec, n))


def test_params_and_clone():
    est = ParallelRuledSurface(phi=0.4, phistar=0.1)
    assert est.get_params() == {"phi": 0.4, "phistar": 0.1, "period": 2 * np.pi}
    c = clone(est.set_params(phi=0.2))
    assert c.phi == 0.2 and not hasattr(c, "pframe_")


def test_invariants_fit_transform():
    X = samples(hyperboloid())
    est = RuledSurfaceInvariants().fit(X)
    assert est.n_features_in_ == 6
    assert est.invariants_["U1"].lam == pytest.approx(-2.5 * np.pi, abs=1e-8)
    assert "C" in est.invariants_
    K = est.transform(X)
    assert K.shape == (512, 4)
    np.testing.assert_allclose(K[:, 0], 0.75, atol=1e-8)
    np.testing.assert_allclose(K[:, 2], -1.25, atol=1e-8)


def test_varying_angle_has_no_axis_invariants():
    est = RuledSurfaceInvariants().fit(samples(wobbly()))
    assert "C" not in est.invariants_ and est.pfaffian_ is not None


def test_not_fitted():
    with pytest.raises(NotFittedError):
        RuledSurfaceInvariants().transform(samples(hyperboloid()))
    with pytest.raises(NotFittedError):
        ParallelRuledSurface().inverse_transform(samples(hyperboloid()))


@pytest.mark.parametrize(
    "X, match",
    [
        (np.zeros((32, 5)), "6 columns"),
        (np.zeros((32, 6)), "unit timelike"),
        (np.zeros((4, 6)), "sample"),
    ],
)
def test_validation_errors(X, match):
    with pytest.raises(ValueError, match=match):
        RuledSurfaceInvariants().fit(X)


def test_moment_must_be_orthogonal():
    X = samples(hyperboloid())
    X[3, 3:] = X[3, :3]
    with pytest.raises(ValueError, match="row 3"):
        RuledSurfaceInvariants().fit(X)


def test_bad_period():
    with pytest.raises(ValueError, match="period"):
        RuledSurfaceInvariants(period=-1).fit(samples(hyperboloid()))


def test_parallel_transform_shape_and_zero_angle():
    X = samples(wobbly())
    Y = ParallelRuledSurface().fit_transform(X)
    np.testing.assert_allclose(Y, X, atol=0)


def test_parallel_surface_of_cone_is_cone_only_without_offset():
    X = samples(hyperboloid_point(), 1024)
    est = ParallelRuledSurface(phi=0.5).fit(X)
    for a in ("V1", "V2", "V3", "Cbar"):
        assert abs(est.invariants_[a].L) < 1e-8
    # a nonzero phi* moves the rulings off the common point
    est = ParallelRuledSurface(phi=0.5, phistar=0.2).fit(X)
    assert abs(est.invariants_["V1"].L) > 0.1


def test_inverse_transform_round_trip():
    X = samples(wobbly(), 1024)
    est = ParallelRuledSurface(phi=0.3, phistar=0.1).fit(X)
    back = est.inverse_transform(est.transform(X))
    np.testing.assert_allclose(back, X, atol=1e-6)


def test_inverse_transform_row_mismatch():
    est = ParallelRuledSurface(phi=0.3).fit(samples(wobbly(), 512))
    with pytest.raises(ValueError, match="rows"):
        est.inverse_transform(est.transform(samples(wobbly(), 256)))
