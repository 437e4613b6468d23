"""Two-path verification report.

Every closed-form relation is evaluated next to an independent computation:

* pitch and angle of pitch straight from the ambient Steiner vector, node by
  node (``Lambda = -<D, X>``, ``L = <d, x*> + <d*, x>``),
* drall as the ratio ``<x', x*'> / <x', x'>`` with ``x`` differentiated on the
  grid,
* frame equations against finite differences of the sampled frame.

A relation whose hypotheses fail on the given curve (case of the Pfaffian
vector, constant angle, nonzero denominators) is reported as skipped with the
reason, never dropped. Entries are keyed by fixed relation labels such as
``2.49`` or ``2.87-literal-vs-corrected``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

import numpy as np

from . import dual as dn
from .dual import Dual
from .errors import HYPOTHESIS_ERRORS, VaryingTheta
from .frenet import (
    CurveSpec,
    PfaffCase,
    SampledFrame,
    axis_vector,
    diff_periodic,
    frenet,
    pfaffian,
    sample_curve,
)
from .invariants import (
    CurvatureIntegrals,
    InvariantTriple,
    angle_C_closed,
    angle_C_expanded,
    axis_invariants,
    constant_angle,
    drall_spacelike_form,
    drall_timelike_form,
    frame_dralls,
    pitch_C_closed,
    pitch_C_expanded,
    steiner,
)
from .minkowski import DualVec3, dcross, ddet, dinner, dnorm
from .parallel import (
    angle_Cbar_closed,
    angle_Cbar_composed,
    angle_Cbar_from_v,
    apply_matrix,
    as_angle,
    corollary_expand,
    parallel_frame,
    pitch_Cbar_closed,
    pitch_Cbar_composed,
    pitch_Cbar_from_v,
    steiner_bar,
    transfer_matrix,
    v_axis_invariants,
)

TOL_ABS = 1e-8
TOL_REL = 1e-6
#: nodes whose drall denominator is below this fraction of the largest are masked
DRALL_MASK = 1e-3


# ---------------------------------------------------------------- report types


@dataclass
class RelationEntry:
    relation_id: str
    lhs: object
    rhs: object
    abs_residual: float | None
    rel_residual: float | None
    status: str  # "pass", "fail" or "skipped"
    note: str = ""
    variants: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool | None:
        return None if self.status == "skipped" else self.status == "pass"


@dataclass
class RelationReport:
    entries: list = field(default_factory=list)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, relation_id: str) -> RelationEntry:
        for e in self.entries:
            if e.relation_id == relation_id:
                return e
        raise KeyError(relation_id)

    @property
    def ids(self) -> list:
        return [e.relation_id for e in self.entries]

    @property
    def failures(self) -> list:
        return [e for e in self.entries if e.status == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failures


class _Skip(Exception):
    pass


# ---------------------------------------------------------------- residuals


def _parts(x) -> list:
    if isinstance(x, (tuple, list)):
        return [p for item in x for p in _parts(item)]
    if isinstance(x, (Dual, DualVec3)):
        return [np.asarray(x.real, dtype=float), np.asarray(x.dual, dtype=float)]
    return [np.asarray(x, dtype=float)]


def summarize(x):
    """Compact form of a compared quantity for the report."""
    if isinstance(x, Dual) and np.ndim(x.real) == 0:
        return x
    if isinstance(x, (int, float, np.floating)):
        return float(x)
    vals = np.concatenate([p.ravel() for p in _parts(x)])
    vals = vals[np.isfinite(vals)]
    if vals.size == 0:
        return None
    return {"min": float(vals.min()), "max": float(vals.max()), "mean": float(vals.mean())}


def residuals(lhs, rhs):
    """``(max |lhs - rhs|, that / max |rhs|)`` over finite pairs.

    NaN entries (masked nodes) are ignored; ``(None, None)`` when nothing is
    left to compare.
    """
    L, R = _parts(lhs), _parts(rhs)
    if len(L) != len(R):
        raise ValueError("lhs and rhs have different structure")
    diffs, scales = [], []
    for a, b in zip(L, R):
        a, b = np.broadcast_arrays(a, b)
        ok = np.isfinite(a) & np.isfinite(b)
        diffs.append(np.abs(a - b)[ok].ravel())
        scales.append(np.abs(b)[ok].ravel())
    d, s = np.concatenate(diffs), np.concatenate(scales)
    if d.size == 0:
        return None, None
    err, scale = float(d.max()), float(s.max())
    if scale > 0:
        rel = err / scale
    else:
        rel = 0.0 if err == 0 else float("inf")
    return err, rel


def _passes(err, rel, tol_abs, tol_rel) -> bool:
    return err <= tol_abs or rel <= tol_rel


# ---------------------------------------------------------------- definitional paths


def fd_drall(X: DualVec3, period: float):
    """``<x', x*'> / <x', x'>`` from grid derivatives; masked nodes are NaN."""
    dX = diff_periodic(X, period)
    den = dinner(dX, dX).real
    num = np.einsum("...i,i,...i->...", dX.real, np.array([-1.0, 1.0, 1.0]), dX.dual)
    out = np.full(den.shape, np.nan)
    top = np.max(np.abs(den))
    if top <= 1e-12:
        return out
    ok = np.abs(den) > DRALL_MASK * top
    out[ok] = num[ok] / den[ok]
    return out


def ambient_angle(D: DualVec3, X: DualVec3) -> Dual:
    """``Lambda_X = -<D, X>`` per node."""
    return -dinner(D, X)


def ambient_pitch(D: DualVec3, X: DualVec3):
    """``<d, x*> + <d*, x>`` per node."""
    return dinner(D, X).dual


def unit_along(case: PfaffCase, Psi: DualVec3, curv: Dual, tors: Dual) -> DualVec3:
    """``Psi / ||Psi||`` oriented like the axis formula of the given case."""
    sign = np.sign(curv.real) if case is PfaffCase.SPACELIKE else np.sign(tors.real)
    return Psi * (np.asarray(sign, dtype=float) / dnorm(Psi))


def split_axis(case, w, ws, x1, x1s, x3, x3s):
    """Real and dual parts of the Pfaffian axis assembled term by term."""
    w = np.asarray(w)[..., None]
    ws = np.asarray(ws)[..., None]
    sh, ch = np.sinh(w), np.cosh(w)
    if case is PfaffCase.SPACELIKE:
        return sh * x1 - ch * x3, sh * x1s - ch * x3s + ws * (ch * x1 - sh * x3)
    return ch * x1 - sh * x3, ch * x1s - sh * x3s + ws * (sh * x1 - ch * x3)


# ---------------------------------------------------------------- builder


class _Builder:
    def __init__(self, tol_abs: float, tol_rel: float):
        self.tol_abs, self.tol_rel = tol_abs, tol_rel
        self.report = RelationReport()

    def add(self, relation_id: str, fn: Callable):
        """Run one relation; ``fn`` returns ``(lhs, rhs, note)`` or an entry."""
        try:
            out = fn()
        except _Skip as exc:
            out = self.skipped(relation_id, f"hypothesis: {exc}")
        except HYPOTHESIS_ERRORS as exc:
            out = self.skipped(relation_id, f"hypothesis: {type(exc).__name__}: {exc}")
        if not isinstance(out, RelationEntry):
            lhs, rhs, note = out
            out = self.compare(relation_id, lhs, rhs, note)
        self.report.entries.append(out)

    def skipped(self, relation_id, note, variants=None) -> RelationEntry:
        return RelationEntry(relation_id, None, None, None, None, "skipped", note, variants or {})

    def compare(self, relation_id, lhs, rhs, note="") -> RelationEntry:
        err, rel = residuals(lhs, rhs)
        if err is None:
            return self.skipped(relation_id, "hypothesis: no admissible nodes; " + note)
        status = "pass" if _passes(err, rel, self.tol_abs, self.tol_rel) else "fail"
        return RelationEntry(relation_id, summarize(lhs), summarize(rhs), err, rel, status, note)

    def audit(self, relation_id, variants: dict, rhs, adopted: str, note="") -> RelationEntry:
        """Compare several candidate forms against one reference.

        The entry verdict is that of the ``adopted`` variant; every variant
        carries its own residuals and verdict.
        """
        pairs = {name: (lhs, rhs) for name, lhs in variants.items()}
        return self.audit_pairs(relation_id, pairs, adopted, note)

    def audit_pairs(self, relation_id, pairs: dict, adopted: str, note="") -> RelationEntry:
        out = {}
        for name, (lhs, rhs) in pairs.items():
            err, rel = residuals(lhs, rhs)
            ok = None if err is None else _passes(err, rel, self.tol_abs, self.tol_rel)
            out[name] = {"abs_residual": err, "rel_residual": rel, "pass": ok}
        main = out[adopted]
        if main["abs_residual"] is None:
            return self.skipped(relation_id, "hypothesis: no admissible nodes; " + note, out)
        status = "pass" if main["pass"] else "fail"
        lhs, rhs = pairs[adopted]
        return RelationEntry(
            relation_id, summarize(lhs), summarize(rhs),
            main["abs_residual"], main["rel_residual"], status, note, out,
        )


# ---------------------------------------------------------------- frame checks


def verify_frenet(frame: SampledFrame, tol_abs: float = TOL_ABS, tol_rel: float = TOL_REL,
                  _builder: _Builder | None = None) -> RelationReport:
    """Frame relations, orthonormality and Frenet equations of a sampled frame."""
    b = _builder or _Builder(tol_abs, tol_rel)
    U1, U2, U3 = frame.axes
    k, t = frame.kappa, frame.tau
    T = frame.period

    def frame_relations():
        lhs = (dcross(U1, U2), dcross(U2, U3), dcross(U3, U1))
        return b.audit_pairs(
            "2.1",
            {
                "adopted": (lhs, (U3, -U1, U2)),
                "printed": (lhs, (-U3, U1, -U2)),
                "stated": (lhs, (U3, U1, -U2)),
            },
            "adopted",
            "(U1^U2, U2^U3, U3^U1) against each sign pattern; adopted (U3, -U1, U2)",
        )

    b.add("2.1", frame_relations)

    def ortho():
        axes = frame.axes
        G = [dinner(axes[i], axes[j]) for i in range(3) for j in range(3)]
        target = [Dual(float(np.diag([-1.0, 1.0, 1.0])[i, j]), 0.0) for i in range(3) for j in range(3)]
        return tuple(G), tuple(target), "dual Gram matrix against diag(-1, 1, 1)"

    b.add("frame-orthonormality", ortho)

    dU1, dU2, dU3 = (diff_periodic(X, T) for X in frame.axes)
    b.add("2.2-U1", lambda: (dU1, U2 * k, "U1' = kappa U2"))
    b.add("2.2-U2", lambda: (dU2, U1 * k - U3 * t, "U2' = kappa U1 - tau U3"))
    b.add("2.2-U3", lambda: (dU3, U2 * t, "U3' = tau U2"))

    u1, u1s, u2, u2s, u3, u3s = U1.real, U1.dual, U2.real, U2.dual, U3.real, U3.dual
    k1, k1s = np.asarray(k.real)[:, None], np.asarray(k.dual)[:, None]
    k2, k2s = np.asarray(t.real)[:, None], np.asarray(t.dual)[:, None]
    d = lambda x: diff_periodic(x, T)  # noqa: E731
    b.add("2.3-u1", lambda: (d(u1), k1 * u2, "u1' = k1 u2"))
    b.add("2.3-u1*", lambda: (d(u1s), k1 * u2s + k1s * u2, "u1*' = k1 u2* + k1* u2"))
    b.add("2.3-u2", lambda: (d(u2), k1 * u1 - k2 * u3, "u2' = k1 u1 - k2 u3"))
    b.add("2.3-u2*", lambda: (
        d(u2s), k1 * u1s + k1s * u1 - k2 * u3s - k2s * u3, "u2*' = k1 u1* + k1* u1 - k2 u3* - k2* u3"))
    b.add("2.3-u3", lambda: (d(u3), k2 * u2, "u3' = k2 u2"))
    b.add("2.3-u3*", lambda: (d(u3s), k2 * u2s + k2s * u2, "u3*' = k2 u2* + k2* u2"))

    b.add("2.41-kappa-norm", lambda: (dnorm(dU1), k, "||U1'|| against <U1', U2>"))

    def tau_det():
        ddU1 = diff_periodic(U1, T, order=2)
        det = ddet(U1, dU1, ddU1) / dinner(dU1, dU1)
        return -det, t, "-det(U1, U1', U1'') / <U1', U1'> against <U3', U2>"

    b.add("2.41-tau-det", tau_det)
    return b.report


# ---------------------------------------------------------------- full registry


class _Context:
    """Lazily built quantities; errors surface in the entry that needs them."""

    def __init__(self, spec: CurveSpec, Phi: Dual, n: int):
        self.spec, self.Phi, self.n = spec, Phi, n
        self.frame = frenet(sample_curve(spec, n), spec.period)
        self.T = spec.period

    @cached_property
    def IU(self):
        return CurvatureIntegrals.of(self.frame.kappa, self.frame.tau, self.T)

    @cached_property
    def D(self) -> DualVec3:
        return steiner(self.frame).ambient(self.frame)

    @cached_property
    def pf(self):
        return pfaffian(self.frame)

    @cached_property
    def pframe(self):
        return parallel_frame(self.frame, self.Phi)

    @cached_property
    def IV(self):
        return CurvatureIntegrals.of(self.pframe.P, self.pframe.Q, self.T)

    @cached_property
    def pb(self):
        return pfaffian(self.pframe, bar=True)

    @cached_property
    def u(self):
        return {a: axis_invariants(self.frame, a, with_drall=False) for a in ("U1", "U2", "U3")}

    def v(self, axis):
        return v_axis_invariants(self.pframe, self.frame, axis)

    def Omega_const(self):
        return constant_angle(self.pf.Omega)

    def Theta_const(self):
        return constant_angle(self.pb.Omega, err=VaryingTheta, name="theta")


def _need_case(pfd, case: PfaffCase, what="Pfaffian vector"):
    if pfd.case is not case:
        raise _Skip(f"{what} is {pfd.case.value} on this curve, relation needs the {case.value} case")


def verify_relations(spec: CurveSpec, Phi=0.0, n: int = 2048,
                     tol_abs: float = TOL_ABS, tol_rel: float = TOL_REL) -> RelationReport:
    """Evaluate every relation of the registry on one curve and parallel angle."""
    Phi = as_angle(Phi)
    cx = _Context(spec, Phi, n)
    b = _Builder(tol_abs, tol_rel)
    verify_frenet(cx.frame, tol_abs, tol_rel, _builder=b)
    fr, T = cx.frame, cx.T
    U1, U2, U3 = fr.axes

    # -- U-frame surfaces
    def pfaff_rotation():
        Psi = U1 * fr.tau - U3 * fr.kappa
        lhs = (dcross(U1, Psi), dcross(U2, Psi), dcross(U3, Psi))
        rhs = tuple(diff_periodic(X, T) for X in fr.axes)
        return lhs, rhs, "Ui ^ Psi against Ui' for Psi = tau U1 - kappa U3"

    b.add("2.4", pfaff_rotation)

    def steiner_split():
        I = cx.IU
        d = U1.real * I.k2 - U3.real * I.k1
        ds = U1.dual * I.k2 + U1.real * I.k2s - U3.dual * I.k1 - U3.real * I.k1s
        return DualVec3(d, ds), cx.D, "d and d* assembled term by term"

    b.add("2.7", steiner_split)

    drall_u = frame_dralls(fr.kappa, fr.tau)
    for i, (L_id, Lam_id, split_id, P_id) in enumerate(
        [("2.8", "2.9", "2.10", "2.11"), ("2.12", "2.13", None, "2.14"), ("2.15", "2.16", "2.17", "2.18")],
        start=1,
    ):
        X = fr.axes[i - 1]
        name = f"U{i}"
        b.add(L_id, lambda X=X, name=name: (
            cx.u[name].L, ambient_pitch(cx.D, X), f"closed-form pitch of ({name}) against <d,x*>+<d*,x>"))
        b.add(Lam_id, lambda X=X, name=name: (
            cx.u[name].Lambda, ambient_angle(cx.D, X), f"Lambda of ({name}) against -<D,X> per node"))
        if split_id:
            b.add(split_id, lambda name=name: (
                (cx.u[name].lam, cx.u[name].L),
                (float(cx.u[name].Lambda.real), cx.u[name].L_from_angle),
                "(lambda, L) against (Re Lambda, -Du Lambda)"))
        b.add(P_id, lambda X=X, i=i, name=name: (
            drall_u[i - 1](), fd_drall(X, T), f"drall of ({name}) against <x',x*'>/<x',x'>"))

    # -- Pfaffian axis C
    _axis_relations(b, cx, bar=False)

    # -- parallel surface
    def pframe_split():
        pf_ = cx.pframe
        f, fs = float(Phi.real), float(Phi.dual)
        ch, sh = np.cosh(f), np.sinh(f)
        v1 = ch * U1.real + sh * U3.real
        v1s = ch * U1.dual + sh * U3.dual + fs * (sh * U1.real + ch * U3.real)
        return DualVec3(v1, v1s), pf_.V1, "v1 and v1* assembled term by term"

    b.add("2.34", pframe_split)

    def involution():
        M = transfer_matrix(Phi)
        MM = [[sum((M[i][k] * M[k][j] for k in range(3)), dn.ZERO) for j in range(3)] for i in range(3)]
        I3 = [[Dual(float(i == j), 0.0) for j in range(3)] for i in range(3)]
        return tuple(x for row in MM for x in row), tuple(x for row in I3 for x in row), "M M = I"

    b.add("2.38", involution)
    b.add("2.39", lambda: (
        apply_matrix(transfer_matrix(Phi), *cx.pframe.axes), fr.axes, "M applied to the V-frame gives the U-frame"))

    def v_frenet_1():
        pf_ = cx.pframe
        return diff_periodic(pf_.V1, T), pf_.V2 * pf_.P, "V1' = P V2"

    def v_frenet_23():
        pf_ = cx.pframe
        V1, V2, V3 = pf_.axes
        lhs = (diff_periodic(V2, T), diff_periodic(V3, T))
        rhs = (V1 * pf_.P - V3 * pf_.Q, V2 * pf_.Q)
        return lhs, rhs, "V2' = P V1 - Q V3, V3' = Q V2"

    b.add("2.40", v_frenet_1)
    b.add("2.41", v_frenet_23)
    b.add("2.41-P", lambda: (cx.pframe.P, dnorm(diff_periodic(cx.pframe.V1, T)), "P against ||V1'||"))

    def q_det():
        V1 = cx.pframe.V1
        dV1, ddV1 = diff_periodic(V1, T), diff_periodic(V1, T, order=2)
        return cx.pframe.Q, ddet(V1, dV1, ddV1) / dinner(dV1, dV1), "Q against det(V1,V1',V1'')/<V1',V1'>"

    b.add("2.41-Q", q_det)

    def v_ortho():
        axes = cx.pframe.axes
        G = tuple(dinner(axes[i], axes[j]) for i in range(3) for j in range(3))
        target = tuple(Dual(float(np.diag([-1.0, 1.0, 1.0])[i, j]), 0.0) for i in range(3) for j in range(3))
        return G, target, "V-frame dual Gram matrix against diag(-1, 1, 1)"

    b.add("2.42", v_ortho)

    def pq_split():
        f, fs = float(Phi.real), float(Phi.dual)
        ch, sh = np.cosh(f), np.sinh(f)
        k1, k1s = np.asarray(fr.kappa.real), np.asarray(fr.kappa.dual)
        k2, k2s = np.asarray(fr.tau.real), np.asarray(fr.tau.dual)
        p, ps = k1 * ch + k2 * sh, k1s * ch + k2s * sh + fs * (k1 * sh + k2 * ch)
        q, qs = -k1 * sh - k2 * ch, -k1s * sh - k2s * ch - fs * (k1 * ch + k2 * sh)
        return (Dual(p, ps), Dual(q, qs)), (cx.pframe.P, cx.pframe.Q), "p, p*, q, q* term by term"

    b.add("2.45", pq_split)
    b.add("2.49", lambda: (
        fr.U1 * fr.tau - fr.U3 * fr.kappa, -cx.pframe.Psi_bar, "Psi against -Psi-bar per node"))
    b.add("2.50", lambda: (
        steiner_bar(cx.pframe).ambient(cx.pframe), cx.D,
        "V-frame Steiner vector -V1 oint Q + V3 oint P against U-frame D, per node"))

    def steiner_bar_split():
        pf_, I = cx.pframe, cx.IV
        V1, V3 = pf_.V1, pf_.V3
        d = -V1.real * I.k2 + V3.real * I.k1
        ds = -V1.dual * I.k2 - V1.real * I.k2s + V3.dual * I.k1 + V3.real * I.k1s
        return DualVec3(d, ds), steiner_bar(pf_).ambient(pf_), "d-bar and d-bar* term by term"

    b.add("2.51", steiner_bar_split)

    def cor():
        return corollary_expand({"U1": cx.u["U1"], "U3": cx.u["U3"]}, Phi)

    drall_v = lambda i: frame_dralls(cx.pframe.P, cx.pframe.Q, ("|p|", "|q^2-p^2|", "|q|"))[i - 1]()  # noqa: E731
    V = lambda i: cx.pframe.axes[i - 1]  # noqa: E731

    for i, ids in ((1, ("2.52", "2.53", "2.54", "2.55", "2.56", "2.57", "2.58", "2.59")),
                   (3, ("2.64", "2.65", "2.66", "2.67", "2.68", "2.69", "2.70", "2.71"))):
        L_id, Lexp_id, Lcor_id, Lam_id, Lamcor_id, split_id, P_id, Pexp_id = ids
        name = f"V{i}"
        b.add(L_id, lambda i=i, name=name: (
            cx.v(name).L, ambient_pitch(cx.D, V(i)), f"theorem pitch of ({name}) against <d,v*>+<d*,v>"))
        b.add(Lexp_id, lambda i=i, name=name: (
            cx.v(name).expanded["L"], ambient_pitch(cx.D, V(i)),
            f"pitch of ({name}) in k1, k2, phi against <d,v*>+<d*,v>"))
        b.add(Lcor_id, lambda name=name: (
            cor()[name]["L"], cx.v(name).L, f"corollary pitch of ({name}) against theorem pitch"))
        b.add(Lam_id, lambda i=i, name=name: (
            cx.v(name).Lambda, ambient_angle(cx.D, V(i)), f"theorem Lambda of ({name}) against -<D,V> per node"))
        b.add(Lamcor_id, lambda name=name: (
            cor()[name]["Lambda"], cx.v(name).Lambda, f"corollary Lambda of ({name}) against theorem Lambda"))
        b.add(split_id, lambda name=name: (
            (cor()[name]["lambda"], cor()[name]["L"]),
            (float(cx.v(name).Lambda.real), cx.v(name).L_from_angle),
            f"corollary (lambda, L) of ({name}) against (Re, -Du) of the theorem Lambda"))
        b.add(P_id, lambda i=i, name=name: (
            drall_v(i), fd_drall(V(i), T), f"drall of ({name}) against <v',v*'>/<v',v'>"))
        b.add(Pexp_id, lambda i=i, name=name: (
            cx.v(name).expanded["drall"], fd_drall(V(i), T),
            f"drall of ({name}) in k1, k2, phi against <v',v*'>/<v',v'>"))
        if i == 1:
            b.add("2.60", lambda: (cx.v("V2").L, ambient_pitch(cx.D, V(2)), "L of (V2) = 0 against <d,v*>+<d*,v>"))
            b.add("2.61", lambda: (
                cx.v("V2").Lambda, ambient_angle(cx.D, V(2)), "Lambda of (V2) = 0 against -<D,V2>"))
            b.add("2.62", lambda: (drall_v(2), fd_drall(V(2), T), "drall of (V2) against <v',v*'>/<v',v'>"))
            b.add("2.63-vs-2.14", lambda: (
                cx.v("V2").expanded["drall"], frame_dralls(fr.kappa, fr.tau)[1](),
                "drall of (V2) in k1, k2 against drall of (U2)"))

    # -- axis C-bar
    _axis_relations(b, cx, bar=True)

    # -- reductions at Phi = 0
    def at_zero(fn):
        def run():
            if float(Phi.real) != 0.0 or float(Phi.dual) != 0.0:
                raise _Skip("requires Phi = 0")
            return fn()
        return run

    b.add("reduction-Phi0-frame", at_zero(lambda: (
        cx.pframe.axes, (U1, U2, -U3), "(V1, V2, V3) against (U1, U2, -U3)")))
    b.add("reduction-Phi0-curvatures", at_zero(lambda: (
        (cx.pframe.P, cx.pframe.Q), (fr.kappa, -fr.tau), "(P, Q) against (kappa, -tau)")))

    def red_axis(vname, uname, sign):
        def fn():
            v = cx.v(vname)
            u = axis_invariants(fr, uname)
            lhs = (v.Lambda, v.L, v.drall)
            rhs = (u.Lambda * sign, sign * u.L, u.drall)
            return lhs, rhs, f"(Lambda, L, drall) of ({vname}) against those of ({'-' if sign < 0 else ''}{uname})"
        return fn

    b.add("reduction-Phi0-V1", at_zero(red_axis("V1", "U1", 1.0)))
    b.add("reduction-Phi0-V2", at_zero(red_axis("V2", "U2", 1.0)))
    b.add("reduction-Phi0-V3", at_zero(red_axis("V3", "U3", -1.0)))

    def red_steiner():
        Db = steiner_bar(cx.pframe).to_u_frame(Phi)
        D = steiner(fr)
        return (Db.c1, Db.c2, Db.c3), (D.c1, D.c2, D.c3), "V-frame Steiner coefficients moved to the U-frame"

    b.add("reduction-Phi0-steiner", at_zero(red_steiner))
    return b.report


# ---------------------------------------------------------------- axis surfaces


def _axis_relations(b: _Builder, cx: _Context, bar: bool):
    """Relations of the axis C (``bar=False``) or C-bar (``bar=True``)."""
    if bar:
        frame = lambda: cx.pframe  # noqa: E731
        pdat = lambda: cx.pb  # noqa: E731
        ang = lambda: cx.Theta_const()  # noqa: E731
        ints = lambda: cx.IV  # noqa: E731
        ids = {
            PfaffCase.SPACELIKE: dict(vec="2.72", comp="2.73", split="2.74", L="2.75", Lexp="2.76",
                                      Lcomp="2.77", Lam="2.78", Lamexp="2.79", Lamcomp="2.80"),
            PfaffCase.TIMELIKE: dict(vec="2.82", comp="2.83", split="2.84", L="2.85", Lexp="2.86",
                                     Lcomp="2.87-literal-vs-corrected", Lam="2.88", Lamexp="2.89", Lamcomp="2.90"),
        }
        spacelike_drall_id, timelike_drall_id, degen_id = "2.81-denominator", "2.91-denominator", "degenerate-Theta0"
        what, sym = "Pfaffian vector of the parallel frame", "theta"
    else:
        frame = lambda: cx.frame  # noqa: E731
        pdat = lambda: cx.pf  # noqa: E731
        ang = lambda: cx.Omega_const()  # noqa: E731
        ints = lambda: cx.IU  # noqa: E731
        ids = {
            PfaffCase.SPACELIKE: dict(vec="2.19", split="2.20", L="2.21", Lexp="2.22", Lam="2.23", Lamexp="2.24"),
            PfaffCase.TIMELIKE: dict(vec="2.26", split="2.27", L="2.28", Lexp="2.29", Lam="2.30", Lamexp="2.31"),
        }
        spacelike_drall_id, timelike_drall_id, degen_id = "2.25-denominator", "2.32-denominator", "degenerate-Omega0"
        what, sym = "Pfaffian vector", "omega"

    def axis_now():
        p = pdat()
        X1, _, X3 = frame().axes
        return axis_vector(p.case, p.Omega, X1, X3)

    def coeff_invariants():
        """Angle and pitch of the two axes the frame-relative forms are built from."""
        if bar:
            v1, v3 = cx.v("V1"), cx.v("V3")
            return v1.Lambda, v1.L, v3.Lambda, v3.L
        u1, u3 = cx.u["U1"], cx.u["U3"]
        return u1.Lambda, u1.L, u3.Lambda, u3.L

    for case in (PfaffCase.SPACELIKE, PfaffCase.TIMELIKE):
        r = ids[case]

        def need(case=case):
            _need_case(pdat(), case, what)

        def vec(case=case):
            need(case)
            p = pdat()
            k, t = frame().curvatures
            return axis_now(), unit_along(case, p.Psi, k, t), "axis formula against Psi / ||Psi||"

        def split(case=case):
            need(case)
            p = pdat()
            X1, _, X3 = frame().axes
            c, cs = split_axis(case, p.Omega.real, p.Omega.dual, X1.real, X1.dual, X3.real, X3.dual)
            return DualVec3(c, cs), axis_now(), "real and dual parts term by term"

        def closed_L(case=case):
            need(case)
            W = ang()
            fn = pitch_Cbar_closed if bar else pitch_C_closed
            return fn(case, W.real, W.dual, ints()), ambient_pitch(cx.D, axis_now()), \
                f"closed-form pitch (constant {sym}) against <d,c*>+<d*,c>"

        def expanded_L(case=case):
            need(case)
            p = pdat()
            La1, L1, La3, L3 = coeff_invariants()
            w, ws = np.asarray(p.Omega.real), np.asarray(p.Omega.dual)
            if bar:
                lhs = pitch_Cbar_from_v(case, w, ws, InvariantTriple("V1", La1, L1, None),
                                        InvariantTriple("V3", La3, L3, None))
            else:
                lhs = pitch_C_expanded(case, w, ws, L1, float(La1.real), L3, float(La3.real))
            return lhs, ambient_pitch(cx.D, axis_now()), \
                f"frame-relative pitch with per-node {sym} against <d,c*>+<d*,c>"

        def closed_Lam(case=case):
            need(case)
            W = ang()
            fn = angle_Cbar_closed if bar else angle_C_closed
            return fn(case, W, ints()), ambient_angle(cx.D, axis_now()), \
                f"closed-form Lambda (constant {sym}) against -<D,C>"

        def expanded_Lam(case=case):
            need(case)
            p = pdat()
            La1, _, La3, _ = coeff_invariants()
            fn = angle_Cbar_from_v if bar else angle_C_expanded
            return fn(case, p.Omega, La1, La3), ambient_angle(cx.D, axis_now()), \
                f"frame-relative Lambda with per-node {sym} against -<D,C>"

        b.add(r["vec"], vec)
        if bar:
            def comp(case=case):
                need(case)
                p = pdat()
                psi = p.Omega + cx.Phi
                s, c = dn.sinh(psi), dn.cosh(psi)
                U1, _, U3 = cx.frame.axes
                lhs = U1 * s + U3 * c if case is PfaffCase.SPACELIKE else U1 * c + U3 * s
                return lhs, axis_now(), "composed (theta + phi) axis against the V-frame axis"

            b.add(r["comp"], comp)
        b.add(r["split"], split)
        b.add(r["L"], closed_L)
        b.add(r["Lexp"], expanded_L)
        if bar:
            def composed_L(case=case, rid=r["Lcomp"]):
                need(case)
                p = pdat()
                u1, u3 = cx.u["U1"], cx.u["U3"]
                th, ths = np.asarray(p.Omega.real), np.asarray(p.Omega.dual)
                rhs = ambient_pitch(cx.D, axis_now())
                corrected = pitch_Cbar_composed(case, th, ths, cx.Phi, u1, u3)
                if case is PfaffCase.SPACELIKE:
                    return corrected, rhs, "composed pitch with per-node theta against <d,c*>+<d*,c>"
                literal = pitch_Cbar_composed(case, th, ths, cx.Phi, u1, u3, literal=True)
                return b.audit(
                    rid, {"corrected": corrected, "literal": literal}, rhs, "corrected",
                    "composed pitch with per-node theta; 'corrected' shifts by phi* + theta*, "
                    "'literal' by phi*' + theta* = theta* since phi* is constant",
                )

            def composed_Lam(case=case):
                need(case)
                p = pdat()
                fn = angle_Cbar_composed(case, p.Omega, cx.Phi, cx.u["U1"].Lambda, cx.u["U3"].Lambda)
                return fn, ambient_angle(cx.D, axis_now()), "composed (theta + phi) Lambda against -<D,C-bar>"

            b.add(r["Lcomp"], composed_L)
        b.add(r["Lam"], closed_Lam)
        b.add(r["Lamexp"], expanded_Lam)
        if bar:
            b.add(r["Lamcomp"], composed_Lam)

        if case is PfaffCase.SPACELIKE:
            b.add(spacelike_drall_id, lambda: _drall_audit(b, spacelike_drall_id, cx, frame(), pdat(), True, bar))
            b.add(degen_id, lambda: _degenerate(cx, frame(), coeff_invariants()))
        else:
            b.add(timelike_drall_id, lambda: _drall_audit(b, timelike_drall_id, cx, frame(), pdat(), False, bar))


def _degenerate(cx, frame, coeffs):
    """Spacelike axis formulas with the angle forced to zero: ``C = -X3``."""
    X1, _, X3 = frame.axes
    La1, _, La3, _ = coeffs
    zero = dn.ZERO
    lhs = (axis_vector(PfaffCase.SPACELIKE, zero, X1, X3), angle_C_expanded(PfaffCase.SPACELIKE, zero, La1, La3))
    return lhs, (-X3, -La3), "axis and Lambda at angle 0 against (-X3, -Lambda_X3)"


def _drall_audit(b, rid, cx, frame, p, spacelike_form: bool, bar: bool):
    """Printed drall of one axis form against the definitional ratio.

    The form ``sinh W X1 - cosh W X3`` (or ``cosh W X1 - sinh W X3``) is
    built with the curve's own angle ``W(t)``; when the curve is in the other
    case this is an off-case evaluation of the same algebraic identity.
    """
    k, t = frame.curvatures
    X1, _, X3 = frame.axes
    args = (np.asarray(k.real), np.asarray(k.dual), np.asarray(t.real), np.asarray(t.dual),
            np.asarray(p.Omega.real), np.asarray(p.Omega.dual), p.Omega_prime[0], p.Omega_prime[1])
    case = PfaffCase.SPACELIKE if spacelike_form else PfaffCase.TIMELIKE
    X = axis_vector(case, p.Omega, X1, X3)
    ref = fd_drall(X, cx.T)
    sq = "theta'^2" if bar else "omega'^2"
    if spacelike_form:
        forms = {
            "printed": drall_spacelike_form(*args, wp2_sign=-1.0),
            f"plus-{sq}": drall_spacelike_form(*args, wp2_sign=1.0),
        }
        adopted = "printed"
    elif bar:
        forms = {
            "printed": drall_timelike_form(*args, wp2_sign=1.0),
            f"minus-{sq}": drall_timelike_form(*args, wp2_sign=-1.0),
        }
        adopted = "printed"
    else:
        forms = {
            "printed": drall_timelike_form(*args, printed_32=True),
            "corrected": drall_timelike_form(*args),
        }
        adopted = "corrected"
    variants = {}
    for name, (num, den) in forms.items():
        val = np.full(np.shape(den), np.nan)
        ok = np.isfinite(ref) & (np.abs(den) > 1e-12)
        val[ok] = num[ok] / den[ok]
        variants[name] = val
    note = "drall formula against <x',x*'>/<x',x'> of the same axis form"
    if p.case is not case:
        note += f"; off-case evaluation (curve is {p.case.value})"
    return b.audit(rid, variants, ref, adopted, note)
