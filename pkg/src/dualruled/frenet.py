"""Closed dual curves on a periodic grid and their dual Frenet apparatus.

A closed ruled surface is a periodic family of oriented lines ``U(t)``; its
direction ``e(t)`` is a unit timelike vector and its moment is built from a
point generator ``alpha(t)`` as ``alpha ^ e``. Derivatives are taken with
4th-order periodic central differences on the uniform grid
``t_i = i * period / N``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import dual as dn
from .dual import Dual
from .errors import (
    BadSpec,
    DegenerateSpeed,
    MixedCase,
    NonSpacelikeTangentImage,
    NonTimelikeDirector,
    NullPfaffian,
    NullPfaffianBar,
)
from .minkowski import NULL_TOL, DualVec3, dcross, dinner, dnorm, lcross, linner

MIN_SAMPLES = 16


# ---------------------------------------------------------------- descriptors


@dataclass(frozen=True)
class HyperboloidCircle:
    """``e(t) = (cosh a, sinh a cos wt, sinh a sin wt)`` with ``w = 2 pi / period``."""

    a: float
    kind = "hyperboloid_circle"

    def __call__(self, t, period):
        w = 2.0 * np.pi / period
        ca, sa = np.cosh(self.a), np.sinh(self.a)
        return np.stack(
            [np.full_like(t, ca), sa * np.cos(w * t), sa * np.sin(w * t)], axis=-1
        )


@dataclass(frozen=True)
class FourierCurve:
    """Three truncated Fourier series, one per component.

    Each component is ``(cos, sin)`` where ``cos[k]`` multiplies
    ``cos(k w t)`` for ``k = 0, 1, ...`` and ``sin[k]`` multiplies
    ``sin((k + 1) w t)``.
    """

    components: tuple
    kind = "fourier"

    def __post_init__(self):
        comps = tuple((tuple(map(float, c)), tuple(map(float, s))) for c, s in self.components)
        if len(comps) != 3:
            raise BadSpec("fourier curve needs exactly three components")
        object.__setattr__(self, "components", comps)

    def __call__(self, t, period):
        w = 2.0 * np.pi / period
        out = np.zeros(np.shape(t) + (3,))
        for i, (cos, sin) in enumerate(self.components):
            for k, c in enumerate(cos):
                out[..., i] += c * np.cos(k * w * t)
            for k, s in enumerate(sin, start=1):
                out[..., i] += s * np.sin(k * w * t)
        return out


@dataclass(frozen=True)
class ZeroMoment:
    kind = "zero"

    def __call__(self, t, period, e):
        return np.zeros_like(e)


@dataclass(frozen=True)
class PointMoment:
    """Every ruling passes through the fixed point ``p``."""

    p: tuple
    kind = "point"

    def __call__(self, t, period, e):
        return lcross(np.asarray(self.p, dtype=float), e)


@dataclass(frozen=True)
class BaseCurveMoment:
    """Ruling ``i`` passes through ``alpha(t_i)``."""

    curve: FourierCurve
    kind = "base_curve"

    def __call__(self, t, period, e):
        return lcross(self.curve(t, period), e)


@dataclass(frozen=True)
class CurveSpec:
    period: float
    director: object
    moment: object = field(default_factory=ZeroMoment)

    def __post_init__(self):
        if not (np.isfinite(self.period) and self.period > 0):
            raise BadSpec(f"period must be positive, got {self.period!r}")


def grid(period: float, n: int) -> np.ndarray:
    return np.arange(n) * (period / n)


def sample_curve(spec: CurveSpec, n: int) -> DualVec3:
    """Unit dual vectors ``e + eps alpha^e`` on the periodic grid."""
    if n < MIN_SAMPLES:
        raise BadSpec(f"need at least {MIN_SAMPLES} samples, got {n}")
    t = grid(spec.period, n)
    e = spec.director(t, spec.period)
    ee = linner(e, e)
    bad = np.flatnonzero(ee >= -NULL_TOL)
    if bad.size:
        raise NonTimelikeDirector("director is not timelike", node=int(bad[0]))
    e = e / np.sqrt(-ee)[:, None]
    return DualVec3(e, spec.moment(t, spec.period, e))


# ---------------------------------------------------------------- derivatives


def _d1(y, h):
    return (
        -np.roll(y, -2, axis=0) + 8 * np.roll(y, -1, axis=0)
        - 8 * np.roll(y, 1, axis=0) + np.roll(y, 2, axis=0)
    ) / (12 * h)


def _d2(y, h):
    return (
        -np.roll(y, -2, axis=0) + 16 * np.roll(y, -1, axis=0) - 30 * y
        + 16 * np.roll(y, 1, axis=0) - np.roll(y, 2, axis=0)
    ) / (12 * h * h)


def diff_periodic(samples, period: float, order: int = 1):
    """4th-order central difference of a periodic sequence (axis 0).

    Accepts plain arrays, :class:`Dual` and :class:`DualVec3`; dual objects
    are differentiated part by part.
    """
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")
    if isinstance(samples, (Dual, DualVec3)):
        cls = type(samples)
        return cls(
            diff_periodic(samples.real, period, order),
            diff_periodic(samples.dual, period, order),
        )
    y = np.asarray(samples, dtype=float)
    if y.shape[0] < MIN_SAMPLES:
        raise ValueError(f"need at least {MIN_SAMPLES} samples")
    h = period / y.shape[0]
    return _d1(y, h) if order == 1 else _d2(y, h)


# ---------------------------------------------------------------- frames


@dataclass(frozen=True, eq=False)
class SampledFrame:
    """Dual Frenet frame ``{U1, U2, U3}`` with curvature and torsion per node."""

    period: float
    U1: DualVec3
    U2: DualVec3
    U3: DualVec3
    kappa: Dual
    tau: Dual

    @property
    def n(self) -> int:
        return len(self.U1)

    @property
    def t(self) -> np.ndarray:
        return grid(self.period, self.n)

    # generic accessors shared with ParallelFrame
    @property
    def axes(self):
        return self.U1, self.U2, self.U3

    @property
    def curvatures(self):
        return self.kappa, self.tau


def frenet(samples: DualVec3, period: float, tol: float = NULL_TOL) -> SampledFrame:
    """Frame ``U2 = U'/||U'||``, ``U3 = U1 ^ U2``; ``kappa = <U1',U2>``, ``tau = <U3',U2>``.

    The sampled ``U1`` must be a unit timelike dual vector at every node.
    """
    U1 = samples
    dU = diff_periodic(U1, period)
    speed2 = linner(dU.real, dU.real)
    small = np.flatnonzero(np.abs(speed2) <= tol)
    if small.size:
        raise DegenerateSpeed("tangent image has vanishing speed", node=int(small[0]))
    neg = np.flatnonzero(speed2 < 0)
    if neg.size:
        raise NonSpacelikeTangentImage("U' is not spacelike", node=int(neg[0]))
    # drop the O(h^4) component of dU along U1 so the frame is orthonormal to
    # round-off; with exact derivatives the projection changes nothing
    N = dU + U1 * dinner(dU, U1)
    U2 = N / dnorm(N)
    U3 = dcross(U1, U2)
    kappa = dinner(dU, U2)
    tau = dinner(diff_periodic(U3, period), U2)
    return SampledFrame(period, U1, U2, U3, kappa, tau)


# ---------------------------------------------------------------- Pfaffian


class PfaffCase(enum.Enum):
    SPACELIKE = "spacelike"  # |k| > |t|
    TIMELIKE = "timelike"  # |k| < |t|


@dataclass(frozen=True, eq=False)
class PfaffData:
    """Unit axis ``C`` along the Pfaffian vector and its angle ``Omega``.

    ``Omega_prime`` holds the derivatives ``(omega', omega*')``.
    """

    case: PfaffCase
    Omega: Dual
    Omega_prime: tuple
    C: DualVec3
    Psi: DualVec3


def pfaff_case(curv: Dual, tors: Dual, tol: float = NULL_TOL, bar: bool = False) -> PfaffCase:
    k, t = np.abs(np.asarray(curv.real)), np.abs(np.asarray(tors.real))
    gap = k - t
    null = np.flatnonzero(np.abs(gap) <= tol)
    if null.size:
        err = NullPfaffianBar if bar else NullPfaffian
        raise err("Pfaffian vector is null", node=int(null[0]))
    if np.all(gap > 0):
        return PfaffCase.SPACELIKE
    if np.all(gap < 0):
        return PfaffCase.TIMELIKE
    raise MixedCase("Pfaffian vector changes causal character along the curve")


def axis_vector(case: PfaffCase, Omega: Dual, X1: DualVec3, X3: DualVec3) -> DualVec3:
    """``sinh W X1 - cosh W X3`` (spacelike) or ``cosh W X1 - sinh W X3`` (timelike)."""
    s, c = dn.sinh(Omega), dn.cosh(Omega)
    if case is PfaffCase.SPACELIKE:
        return X1 * s - X3 * c
    return X1 * c - X3 * s


def pfaffian(frame, tol: float = NULL_TOL, bar: bool = False) -> PfaffData:
    """Pfaffian vector ``Psi = t X1 - k X3`` and its unit axis.

    Works on any frame exposing ``axes`` and ``curvatures`` (the original
    frame, or a parallel frame with ``bar=True``).
    """
    X1, _, X3 = frame.axes
    k, t = frame.curvatures
    case = pfaff_case(k, t, tol, bar)
    ratio = t / k if case is PfaffCase.SPACELIKE else k / t
    Omega = dn.artanh(ratio)
    prime = (
        diff_periodic(np.asarray(Omega.real), frame.period),
        diff_periodic(np.asarray(Omega.dual), frame.period),
    )
    Psi = X1 * t - X3 * k
    return PfaffData(case, Omega, prime, axis_vector(case, Omega, X1, X3), Psi)


def samples_from_array(X) -> DualVec3:
    """``(N, 6)`` rows ``[direction, moment]`` to a dual vector sequence."""
    X = np.asarray(X, dtype=float)
    return DualVec3(X[:, :3], X[:, 3:])


def samples_to_array(U: DualVec3) -> np.ndarray:
    return np.concatenate([U.real, U.dual], axis=-1)


def fourier(cos: Sequence[float] = (), sin: Sequence[float] = ()):
    """Shorthand for one :class:`FourierCurve` component."""
    return (tuple(cos), tuple(sin))
