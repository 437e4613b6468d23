"""Steiner vector and integral invariants of closed ruled surfaces.

For an axis ``X`` of the moving frame the invariants are

* dual angle of pitch ``Lambda_X = -<D, X>`` (``D`` the Steiner vector),
* real angle of pitch ``lambda_X = Re Lambda_X``,
* pitch ``L_X = -Du Lambda_X``,
* drall ``P_X = <dx, dx*> / <dx, dx>``, one value per node.

The Steiner vector is kept as coefficients on the moving frame; every
contraction uses the frame metric ``(-1, +1, +1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import dual as dn
from .dual import Dual
from .errors import DrallSingularity, FrameMismatch, VaryingOmega
from .frenet import PfaffCase, PfaffData, SampledFrame

DRALL_TOL = 1e-10
CONSTANT_TOL = 1e-8


def closed_integral(values, period: float):
    """Composite trapezoid over one period of a periodic grid (``h * sum``)."""
    if isinstance(values, Dual):
        return Dual(closed_integral(values.real, period), closed_integral(values.dual, period))
    values = np.asarray(values, dtype=float)
    return float(period / values.shape[0] * np.sum(values, axis=0))


@dataclass(frozen=True, eq=False)
class FrameVector:
    """Dual vector given by coefficients on a moving frame (``tag`` 'U' or 'V')."""

    tag: str
    c1: Dual
    c2: Dual
    c3: Dual

    def __post_init__(self):
        for name in ("c1", "c2", "c3"):
            object.__setattr__(self, name, Dual.of(getattr(self, name)))

    def dot(self, other: "FrameVector") -> Dual:
        if self.tag != other.tag:
            raise FrameMismatch(f"{self.tag}-frame vector against {other.tag}-frame vector")
        return -(self.c1 * other.c1) + self.c2 * other.c2 + self.c3 * other.c3

    def ambient(self, frame):
        """Realise on a sampled frame, node by node."""
        X1, X2, X3 = frame.axes
        return X1 * self.c1 + X2 * self.c2 + X3 * self.c3

    def to_u_frame(self, Phi: Dual) -> "FrameVector":
        """Coefficients on ``U`` of a ``V``-frame vector (parallel angle ``Phi``)."""
        if self.tag == "U":
            return self
        c, s = dn.cosh(Phi), dn.sinh(Phi)
        return FrameVector("U", c * self.c1 - s * self.c3, self.c2, s * self.c1 - c * self.c3)


def unit_axis(tag: str, i: int) -> FrameVector:
    coeffs = [dn.ZERO, dn.ZERO, dn.ZERO]
    coeffs[i - 1] = dn.ONE
    return FrameVector(tag, *coeffs)


@dataclass(frozen=True)
class CurvatureIntegrals:
    """``oint k1, oint k2, oint k1*, oint k2*`` for one frame."""

    k1: float
    k2: float
    k1s: float
    k2s: float

    @classmethod
    def of(cls, curv: Dual, tors: Dual, period: float) -> "CurvatureIntegrals":
        a, b = closed_integral(curv, period), closed_integral(tors, period)
        return cls(a.real, b.real, a.dual, b.dual)

    @property
    def kappa(self) -> Dual:
        return Dual(self.k1, self.k1s)

    @property
    def tau(self) -> Dual:
        return Dual(self.k2, self.k2s)


def steiner(frame: SampledFrame) -> FrameVector:
    """``D = U1 oint tau - U3 oint kappa``."""
    I = CurvatureIntegrals.of(frame.kappa, frame.tau, frame.period)
    return FrameVector("U", I.tau, dn.ZERO, -I.kappa)


def angle_of_pitch(D: FrameVector, axis: FrameVector) -> Dual:
    return -D.dot(axis)


@dataclass(eq=False)
class InvariantTriple:
    """Integral invariants of one closed ruled surface.

    ``L`` is the closed-form pitch; ``L_from_angle`` is ``-Du Lambda``. Other
    evaluations of the same quantities (expanded or composed forms) are kept
    in ``expanded``.
    """

    name: str
    Lambda: Dual
    L: float
    drall: np.ndarray
    expanded: dict = field(default_factory=dict)

    @property
    def lam(self) -> float:
        return float(self.Lambda.real)

    @property
    def L_from_angle(self) -> float:
        return -float(self.Lambda.dual)


def _ratio(num, den, what, tol=DRALL_TOL):
    den = np.asarray(den, dtype=float)
    bad = np.flatnonzero(np.abs(den) <= tol)
    if bad.size:
        raise DrallSingularity(f"drall denominator {what} vanishes", node=int(bad[0]), denominator=what)
    return np.asarray(num, dtype=float) / den


def frame_dralls(curv: Dual, tors: Dual, names=("|k1|", "|k2^2-k1^2|", "|k2|")):
    """Closed-form dralls of the three frame axes: ``k1*/k1``,
    ``(k2 k2* - k1 k1*)/(k2^2 - k1^2)`` and ``k2*/k2``."""
    k1, k1s = np.asarray(curv.real), np.asarray(curv.dual)
    k2, k2s = np.asarray(tors.real), np.asarray(tors.dual)
    return (
        lambda: _ratio(k1s, k1, names[0]),
        lambda: _ratio(k2 * k2s - k1 * k1s, k2 * k2 - k1 * k1, names[1]),
        lambda: _ratio(k2s, k2, names[2]),
    )


def axis_invariants(frame: SampledFrame, axis: str, with_drall: bool = True) -> InvariantTriple:
    """Invariants of the frame surfaces (U1), (U2), (U3).

    With ``with_drall=False`` the drall is skipped (``None``), which avoids
    :class:`DrallSingularity` when only pitch and angle are wanted.
    """
    i = {"U1": 1, "U2": 2, "U3": 3}[axis]
    I = CurvatureIntegrals.of(frame.kappa, frame.tau, frame.period)
    Lam = angle_of_pitch(steiner(frame), unit_axis("U", i))
    L = {1: -I.k2s, 2: 0.0, 3: -I.k1s}[i]
    drall = frame_dralls(frame.kappa, frame.tau)[i - 1]() if with_drall else None
    return InvariantTriple(axis, Lam, L, drall)


# ---------------------------------------------------------------- Pfaffian axis C


def constant_angle(Omega: Dual, tol: float = CONSTANT_TOL, err=VaryingOmega, name="omega") -> Dual:
    """Node mean of an angle that must be constant along the curve."""
    for part in (Omega.real, Omega.dual):
        part = np.asarray(part)
        if part.ndim and np.ptp(part) > tol:
            raise err(f"{name} varies along the curve (spread {np.ptp(part):.3g})")
    return Omega.mean() if np.ndim(Omega.real) else Omega


def pitch_C_closed(case: PfaffCase, w: float, ws: float, I: CurvatureIntegrals) -> float:
    """Pitch of the Pfaffian axis from the curvature integrals (constant ``omega``)."""
    ch, sh = np.cosh(w), np.sinh(w)
    if case is PfaffCase.SPACELIKE:
        return ch * I.k1s - sh * I.k2s - ws * (ch * I.k2 - sh * I.k1)
    return sh * I.k1s - ch * I.k2s - ws * (sh * I.k2 - ch * I.k1)


def pitch_C_expanded(case, w, ws, L1, lam1, L3, lam3) -> float:
    """Same pitch written with the pitches and angles of (U1) and (U3)."""
    ch, sh = np.cosh(w), np.sinh(w)
    if case is PfaffCase.SPACELIKE:
        return sh * L1 - ch * L3 - ws * (ch * lam1 - sh * lam3)
    return ch * L1 - sh * L3 - ws * (sh * lam1 - ch * lam3)


def angle_C_closed(case: PfaffCase, Omega: Dual, I: CurvatureIntegrals) -> Dual:
    s, c = dn.sinh(Omega), dn.cosh(Omega)
    if case is PfaffCase.SPACELIKE:
        return s * I.tau - c * I.kappa
    return c * I.tau - s * I.kappa


def angle_C_expanded(case: PfaffCase, Omega: Dual, Lam1: Dual, Lam3: Dual) -> Dual:
    s, c = dn.sinh(Omega), dn.cosh(Omega)
    if case is PfaffCase.SPACELIKE:
        return s * Lam1 - c * Lam3
    return c * Lam1 - s * Lam3


def axis_coefficients(case: PfaffCase, Omega: Dual, tag: str = "U") -> FrameVector:
    s, c = dn.sinh(Omega), dn.cosh(Omega)
    if case is PfaffCase.SPACELIKE:
        return FrameVector(tag, s, dn.ZERO, -c)
    return FrameVector(tag, c, dn.ZERO, -s)


def drall_spacelike_form(k1, k1s, k2, k2s, w, ws, wp, wsp, wp2_sign=-1.0):
    """Drall of ``sinh W X1 - cosh W X3`` as printed for the spacelike case.

    Returns ``(numerator, denominator)``; ``wp2_sign`` is the sign in front of
    ``omega'^2`` in the denominator (printed: ``-1``).
    """
    sh, ch = np.sinh(w), np.cosh(w)
    A = k1 * sh - k2 * ch
    num = -wp * wsp + A * ((k1s - k2 * ws) * sh + (k1 * ws - k2s) * ch)
    return num, A * A + wp2_sign * wp * wp


def drall_timelike_form(k1, k1s, k2, k2s, w, ws, wp, wsp, wp2_sign=1.0, printed_32=False):
    """Drall of ``cosh W X1 - sinh W X3``.

    The correct denominator is ``(k1 cosh w - k2 sinh w)^2 + omega'^2``. With
    ``printed_32`` the denominator ``(k1 sinh w - k2 cosh w)^2 - omega'^2``
    is used instead, for auditing.
    """
    sh, ch = np.sinh(w), np.cosh(w)
    B = k1 * ch - k2 * sh
    num = wp * wsp + B * ((k1s - k2 * ws) * ch + (k1 * ws - k2s) * sh)
    if printed_32:
        A = k1 * sh - k2 * ch
        return num, A * A - wp * wp
    return num, B * B + wp2_sign * wp * wp


def axis_drall(frame, pf: PfaffData, tol: float = DRALL_TOL) -> np.ndarray:
    """Per-node drall of the Pfaffian axis surface.

    Nodes with a vanishing denominator are NaN: when the angle is constant
    every ruling of the axis surface is parallel and no drall exists.
    """
    k, t = frame.curvatures
    args = (
        np.asarray(k.real), np.asarray(k.dual), np.asarray(t.real), np.asarray(t.dual),
        np.asarray(pf.Omega.real), np.asarray(pf.Omega.dual), pf.Omega_prime[0], pf.Omega_prime[1],
    )
    if pf.case is PfaffCase.SPACELIKE:
        num, den = drall_spacelike_form(*args)
    else:
        num, den = drall_timelike_form(*args)
    out = np.full(np.shape(den), np.nan)
    ok = np.abs(den) > tol
    out[ok] = num[ok] / den[ok]
    return out


def pfaff_axis_invariants(frame: SampledFrame, pf: PfaffData) -> InvariantTriple:
    """Invariants of the Pfaffian axis surface (C); needs constant ``omega``."""
    Omega = constant_angle(pf.Omega)
    I = CurvatureIntegrals.of(frame.kappa, frame.tau, frame.period)
    Lam = angle_C_closed(pf.case, Omega, I)
    L = pitch_C_closed(pf.case, Omega.real, Omega.dual, I)
    D = steiner(frame)
    Lam1, Lam3 = angle_of_pitch(D, unit_axis("U", 1)), angle_of_pitch(D, unit_axis("U", 3))
    expanded = {
        "Lambda": angle_C_expanded(pf.case, Omega, Lam1, Lam3),
        "L": pitch_C_expanded(
            pf.case, Omega.real, Omega.dual, -I.k2s, Lam1.real, -I.k1s, Lam3.real
        ),
        "Lambda_contracted": angle_of_pitch(D, axis_coefficients(pf.case, Omega)),
    }
    return InvariantTriple("C", Lam, L, axis_drall(frame, pf), expanded)
