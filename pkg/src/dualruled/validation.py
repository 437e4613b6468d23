"""Input validation for array-shaped generator samples."""

from __future__ import annotations

import numpy as np
from sklearn.utils import check_array

from .frenet import MIN_SAMPLES
from .minkowski import linner

UNIT_TOL = 1e-8


def check_generator_samples(X, *, tol: float = UNIT_TOL) -> np.ndarray:
    """Validate ``(N, 6)`` rows ``[direction, moment]`` of a closed ruled surface.

    Every row must be a unit timelike dual vector: ``<e, e> = -1`` and
    ``<e, m> = 0`` within ``tol``.
    """
    X = check_array(X, dtype=np.float64, ensure_min_samples=MIN_SAMPLES)
    if X.shape[1] != 6:
        raise ValueError(f"expected 6 columns [direction, moment], got {X.shape[1]}")
    e, m = X[:, :3], X[:, 3:]
    ee = linner(e, e)
    bad = np.flatnonzero(np.abs(ee + 1.0) > tol)
    if bad.size:
        raise ValueError(f"row {int(bad[0])}: direction is not unit timelike (<e,e> = {ee[bad[0]]:.6g})")
    em = linner(e, m)
    bad = np.flatnonzero(np.abs(em) > tol * np.maximum(1.0, np.linalg.norm(m, axis=1)))
    if bad.size:
        raise ValueError(f"row {int(bad[0])}: moment is not orthogonal to the direction")
    return X


def check_period(period) -> float:
    period = float(period)
    if not (np.isfinite(period) and period > 0):
        raise ValueError(f"period must be positive, got {period!r}")
    return period
