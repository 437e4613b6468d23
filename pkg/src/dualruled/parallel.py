"""Parallel ruled surfaces ``V = cosh(Phi) U1 + sinh(Phi) U3``.

``Phi = phi + eps phi*`` is a fixed dual angle. The parallel frame is

    V1 =  cosh Phi U1 + sinh Phi U3
    V2 =  U2
    V3 = -sinh Phi U1 - cosh Phi U3

with curvature ``P = kappa cosh Phi + tau sinh Phi`` and torsion
``Q = -kappa sinh Phi - tau cosh Phi``. The transfer matrix is involutory, so
the same matrix maps the V-frame back to the U-frame.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import dual as dn
from .dual import Dual
from .errors import BadSpec, DegenerateParallel, VaryingTheta
from .frenet import PfaffCase, PfaffData, SampledFrame, grid, pfaffian
from .invariants import (
    CurvatureIntegrals,
    FrameVector,
    InvariantTriple,
    angle_of_pitch,
    axis_invariants,
    axis_drall,
    constant_angle,
    frame_dralls,
    unit_axis,
)
from .minkowski import DualVec3

PARALLEL_TOL = 1e-10


def as_angle(Phi) -> Dual:
    """Coerce to a constant dual angle; per-node angles are rejected."""
    if isinstance(Phi, (tuple, list)):
        Phi = Dual(*Phi)
    Phi = Dual.of(Phi)
    if np.ndim(Phi.real) or np.ndim(Phi.dual):
        raise BadSpec("the parallel angle must be a single constant dual number")
    return Phi


def transfer_matrix(Phi) -> list:
    """3x3 matrix of dual numbers taking (U1, U2, U3) to (V1, V2, V3)."""
    c, s = dn.cosh(as_angle(Phi)), dn.sinh(as_angle(Phi))
    return [[c, dn.ZERO, s], [dn.ZERO, dn.ONE, dn.ZERO], [-s, dn.ZERO, -c]]


def apply_matrix(M, X1: DualVec3, X2: DualVec3, X3: DualVec3):
    return tuple(X1 * row[0] + X2 * row[1] + X3 * row[2] for row in M)


@dataclass(frozen=True, eq=False)
class ParallelFrame:
    period: float
    Phi: Dual
    V1: DualVec3
    V2: DualVec3
    V3: DualVec3
    P: Dual
    Q: Dual

    @property
    def n(self) -> int:
        return len(self.V1)

    @property
    def t(self):
        return grid(self.period, self.n)

    @property
    def axes(self):
        return self.V1, self.V2, self.V3

    @property
    def curvatures(self):
        return self.P, self.Q

    @property
    def Psi_bar(self) -> DualVec3:
        """``Q V1 - P V3``."""
        return self.V1 * self.Q - self.V3 * self.P


def parallel_frame(frame: SampledFrame, Phi, tol: float = PARALLEL_TOL) -> ParallelFrame:
    Phi = as_angle(Phi)
    c, s = dn.cosh(Phi), dn.sinh(Phi)
    V1, V2, V3 = apply_matrix(transfer_matrix(Phi), *frame.axes)
    P = frame.kappa * c + frame.tau * s
    Q = -(frame.kappa * s) - frame.tau * c
    bad = np.flatnonzero(np.abs(np.asarray(P.real)) <= tol)
    if bad.size:
        raise DegenerateParallel("curvature of the parallel curve vanishes", node=int(bad[0]))
    return ParallelFrame(frame.period, Phi, V1, V2, V3, P, Q)


def steiner_bar(pframe: ParallelFrame) -> FrameVector:
    """Steiner vector of the motion on the V-frame: ``-V1 oint Q + V3 oint P``."""
    I = CurvatureIntegrals.of(pframe.P, pframe.Q, pframe.period)
    return FrameVector("V", -I.tau, dn.ZERO, I.kappa)


def v_axis_invariants(pframe: ParallelFrame, frame: SampledFrame, axis: str) -> InvariantTriple:
    """Invariants of (V1), (V2), (V3).

    ``expanded`` holds the same pitch and drall written with the original
    curvatures ``k1, k2, k1*, k2*`` and the angle ``phi + eps phi*``.
    """
    i = {"V1": 1, "V2": 2, "V3": 3}[axis]
    IV = CurvatureIntegrals.of(pframe.P, pframe.Q, pframe.period)
    Lam = angle_of_pitch(steiner_bar(pframe), unit_axis("V", i))
    L = {1: IV.k2s, 2: 0.0, 3: IV.k1s}[i]
    names = ("|p|", "|q^2-p^2|", "|q|")
    drall = frame_dralls(pframe.P, pframe.Q, names)[i - 1]()

    I = CurvatureIntegrals.of(frame.kappa, frame.tau, frame.period)
    f, fs = float(pframe.Phi.real), float(pframe.Phi.dual)
    ch, sh = np.cosh(f), np.sinh(f)
    k1, k1s = np.asarray(frame.kappa.real), np.asarray(frame.kappa.dual)
    k2, k2s = np.asarray(frame.tau.real), np.asarray(frame.tau.dual)
    expanded = {}
    if i == 1:
        expanded["L"] = -sh * I.k1s - ch * I.k2s - fs * (ch * I.k1 + sh * I.k2)
        den = k1 * ch + k2 * sh
        expanded["drall"] = (k1s * ch + k2s * sh) / den + fs * (k1 * sh + k2 * ch) / den
    elif i == 2:
        expanded["drall"] = (k2 * k2s - k1 * k1s) / (k2 * k2 - k1 * k1)
    else:
        expanded["L"] = ch * I.k1s + sh * I.k2s + fs * (sh * I.k1 + ch * I.k2)
        den = -k1 * sh - k2 * ch
        expanded["drall"] = (-k1s * sh - k2s * ch) / den - fs * (k1 * ch + k2 * sh) / den
    return InvariantTriple(axis, Lam, L, drall, expanded)


def corollary_expand(u_inv: dict, Phi) -> dict:
    """Invariants of (V1) and (V3) predicted from those of (U1) and (U3).

    ``u_inv`` maps ``'U1'`` and ``'U3'`` to :class:`InvariantTriple`.
    Returns ``{'V1': {...}, 'V3': {...}}`` with keys ``Lambda``, ``lambda``
    and ``L``.
    """
    Phi = as_angle(Phi)
    c, s = dn.cosh(Phi), dn.sinh(Phi)
    f, fs = float(Phi.real), float(Phi.dual)
    ch, sh = np.cosh(f), np.sinh(f)
    u1, u3 = u_inv["U1"], u_inv["U3"]
    return {
        "V1": {
            "Lambda": c * u1.Lambda + s * u3.Lambda,
            "lambda": ch * u1.lam + sh * u3.lam,
            "L": ch * u1.L + sh * u3.L - fs * (sh * u1.lam + ch * u3.lam),
        },
        "V3": {
            "Lambda": -(s * u1.Lambda) - c * u3.Lambda,
            "lambda": -sh * u1.lam - ch * u3.lam,
            "L": -sh * u1.L - ch * u3.L + fs * (ch * u1.lam + sh * u3.lam),
        },
    }


# ---------------------------------------------------------------- axis C-bar


def bar_pfaffian(pframe: ParallelFrame) -> PfaffData:
    """Unit axis ``C-bar`` along ``Psi-bar`` and its angle ``Theta``."""
    return pfaffian(pframe, bar=True)


def angle_Cbar_closed(case: PfaffCase, Theta: Dual, IV: CurvatureIntegrals) -> Dual:
    s, c = dn.sinh(Theta), dn.cosh(Theta)
    if case is PfaffCase.SPACELIKE:
        return -(s * IV.tau) + c * IV.kappa
    return -(c * IV.tau) + s * IV.kappa


def pitch_Cbar_closed(case: PfaffCase, th: float, ths: float, IV: CurvatureIntegrals) -> float:
    ch, sh = np.cosh(th), np.sinh(th)
    if case is PfaffCase.SPACELIKE:
        return -ch * IV.k1s + sh * IV.k2s + ths * (ch * IV.k2 - sh * IV.k1)
    return -sh * IV.k1s + ch * IV.k2s + ths * (sh * IV.k2 - ch * IV.k1)


def angle_Cbar_from_v(case: PfaffCase, Theta: Dual, LamV1: Dual, LamV3: Dual) -> Dual:
    s, c = dn.sinh(Theta), dn.cosh(Theta)
    if case is PfaffCase.SPACELIKE:
        return s * LamV1 - c * LamV3
    return c * LamV1 - s * LamV3


def pitch_Cbar_from_v(case, th, ths, v1: InvariantTriple, v3: InvariantTriple) -> float:
    ch, sh = np.cosh(th), np.sinh(th)
    if case is PfaffCase.SPACELIKE:
        return sh * v1.L - ch * v3.L + ths * (-ch * v1.lam + sh * v3.lam)
    return ch * v1.L - sh * v3.L + ths * (-sh * v1.lam + ch * v3.lam)


def angle_Cbar_composed(case: PfaffCase, Theta: Dual, Phi: Dual, LamU1: Dual, LamU3: Dual) -> Dual:
    psi = Theta + Phi
    s, c = dn.sinh(psi), dn.cosh(psi)
    if case is PfaffCase.SPACELIKE:
        return s * LamU1 + c * LamU3
    return c * LamU1 + s * LamU3


def pitch_Cbar_composed(
    case, th, ths, Phi: Dual, u1: InvariantTriple, u3: InvariantTriple, literal: bool = False
) -> float:
    """Pitch of (C-bar) from the invariants of (U1), (U3).

    The dual part of the composed angle is ``phi* + theta*``. ``literal``
    replaces ``phi*`` by its derivative (zero, ``Phi`` being constant), which
    is how one printed version of the timelike formula reads.
    """
    f, fs = float(Phi.real), float(Phi.dual)
    ch, sh = np.cosh(th + f), np.sinh(th + f)
    shift = ths if literal else fs + ths
    if case is PfaffCase.SPACELIKE:
        return sh * u1.L + ch * u3.L - shift * (ch * u1.lam + sh * u3.lam)
    return ch * u1.L + sh * u3.L - shift * (sh * u1.lam + ch * u3.lam)


def cbar_invariants(pframe: ParallelFrame, frame: SampledFrame) -> InvariantTriple:
    """Invariants of the axis surface (C-bar); needs constant ``theta``."""
    pb = bar_pfaffian(pframe)
    Theta = constant_angle(pb.Omega, err=VaryingTheta, name="theta")
    IV = CurvatureIntegrals.of(pframe.P, pframe.Q, pframe.period)
    Lam = angle_Cbar_closed(pb.case, Theta, IV)
    L = pitch_Cbar_closed(pb.case, Theta.real, Theta.dual, IV)
    u1, u3 = axis_invariants(frame, "U1", False), axis_invariants(frame, "U3", False)
    v1 = v_axis_invariants_nodrall(pframe, 1)
    v3 = v_axis_invariants_nodrall(pframe, 3)
    th, ths = float(Theta.real), float(Theta.dual)
    expanded = {
        "Lambda_from_V": angle_Cbar_from_v(pb.case, Theta, v1.Lambda, v3.Lambda),
        "L_from_V": pitch_Cbar_from_v(pb.case, th, ths, v1, v3),
        "Lambda_composed": angle_Cbar_composed(pb.case, Theta, pframe.Phi, u1.Lambda, u3.Lambda),
        "L_composed": pitch_Cbar_composed(pb.case, th, ths, pframe.Phi, u1, u3),
        "L_composed_literal": pitch_Cbar_composed(pb.case, th, ths, pframe.Phi, u1, u3, literal=True),
    }
    return InvariantTriple("Cbar", Lam, L, axis_drall(pframe, pb), expanded)


def v_axis_invariants_nodrall(pframe: ParallelFrame, i: int) -> InvariantTriple:
    IV = CurvatureIntegrals.of(pframe.P, pframe.Q, pframe.period)
    Lam = angle_of_pitch(steiner_bar(pframe), unit_axis("V", i))
    return InvariantTriple(f"V{i}", Lam, {1: IV.k2s, 2: 0.0, 3: IV.k1s}[i], None)
