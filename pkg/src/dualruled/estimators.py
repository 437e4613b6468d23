"""scikit-learn style wrappers around the functional core.

Inputs are ``(N, 6)`` arrays whose rows are ``[direction, moment]`` of the
rulings on a uniform periodic grid (see :func:`samples_to_array`).
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import dual as dn
from .dual import Dual
from .errors import HYPOTHESIS_ERRORS
from .frenet import frenet, pfaffian, samples_from_array, samples_to_array
from .invariants import axis_invariants, pfaff_axis_invariants
from .parallel import as_angle, cbar_invariants, parallel_frame, v_axis_invariants
from .validation import check_generator_samples, check_period


def _curvature_table(frame) -> np.ndarray:
    k, t = frame.curvatures
    return np.column_stack([k.real, k.dual, t.real, t.dual])


def _safe(fn):
    try:
        return fn()
    except HYPOTHESIS_ERRORS:
        return None


class RuledSurfaceInvariants(TransformerMixin, BaseEstimator):
    """Frame and integral invariants of a closed ruled surface.

    ``fit`` stores the dual Frenet frame and the invariants of (U1), (U2),
    (U3) and, when defined, the Pfaffian axis (C). ``transform`` maps samples
    to per-node curvatures ``[k1, k1*, k2, k2*]``.
    """

    def __init__(self, period: float = 2 * np.pi):
        self.period = period

    def fit(self, X, y=None):
        X = check_generator_samples(X)
        period = check_period(self.period)
        self.frame_ = frenet(samples_from_array(X), period)
        self.invariants_ = {
            a: axis_invariants(self.frame_, a, with_drall=False) for a in ("U1", "U2", "U3")
        }
        self.pfaffian_ = _safe(lambda: pfaffian(self.frame_))
        if self.pfaffian_ is not None:
            C = _safe(lambda: pfaff_axis_invariants(self.frame_, self.pfaffian_))
            if C is not None:
                self.invariants_["C"] = C
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X):
        check_is_fitted(self, "frame_")
        X = check_generator_samples(X)
        return _curvature_table(frenet(samples_from_array(X), check_period(self.period)))


class ParallelRuledSurface(TransformerMixin, BaseEstimator):
    """Parallel ruled surface at the fixed dual angle ``phi + eps phistar``.

    ``transform`` returns the generator ``V1`` of the parallel surface as
    ``(N, 6)`` samples; ``inverse_transform`` maps such samples back to the
    original generator.
    """

    def __init__(self, phi: float = 0.0, phistar: float = 0.0, period: float = 2 * np.pi):
        self.phi = phi
        self.phistar = phistar
        self.period = period

    def _angle(self) -> Dual:
        return as_angle(Dual(float(self.phi), float(self.phistar)))

    def fit(self, X, y=None):
        X = check_generator_samples(X)
        period = check_period(self.period)
        frame = frenet(samples_from_array(X), period)
        self.frame_ = frame
        self.pframe_ = parallel_frame(frame, self._angle())
        self.invariants_ = {a: _safe(lambda a=a: v_axis_invariants(self.pframe_, frame, a))
                            for a in ("V1", "V2", "V3")}
        cbar = _safe(lambda: cbar_invariants(self.pframe_, frame))
        if cbar is not None:
            self.invariants_["Cbar"] = cbar
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X):
        check_is_fitted(self, "pframe_")
        X = check_generator_samples(X)
        frame = frenet(samples_from_array(X), check_period(self.period))
        return samples_to_array(parallel_frame(frame, self._angle()).V1)

    def inverse_transform(self, Y):
        """Original generator from parallel-surface samples.

        With the transfer matrix ``M`` involutory, ``U1 = cosh Phi V1 + sinh Phi V3``.
        ``V3`` is recovered from the Frenet frame ``(V1, W2, W3)`` of ``Y``,
        where ``W2 = sign(p) V2`` and so ``V3 = -sign(p) W3``; the sign of
        ``p`` is taken from the fitted surface.
        """
        check_is_fitted(self, "pframe_")
        Y = check_generator_samples(Y)
        own = frenet(samples_from_array(Y), check_period(self.period))
        p = np.asarray(self.pframe_.P.real)
        if p.shape[0] != Y.shape[0]:
            raise ValueError(f"expected {p.shape[0]} rows as in fit, got {Y.shape[0]}")
        Phi = self._angle()
        V3 = own.U3 * (-np.sign(p))
        return samples_to_array(own.U1 * dn.cosh(Phi) + V3 * dn.sinh(Phi))
