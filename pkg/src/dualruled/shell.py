"""Curve files, report documents and mesh export.

A curve file is a JSON object::

    {"period": 6.283185307179586,
     "samples": 1024,
     "director": {"kind": "hyperboloid_circle", "a": 0.6931471805599453},
     "moment": {"kind": "zero"},
     "phi": {"real": 0.5, "dual": 0.2}}

``director`` is either ``hyperboloid_circle`` with ``a`` or ``fourier`` with
three ``components`` of ``{"cos": [...], "sin": [...]}``. ``moment`` is
``zero``, ``point`` with ``p`` or ``base_curve`` with ``components``.
"""

from __future__ import annotations

import json
import math
import os
import tempfile
from dataclasses import dataclass

import jsonschema
import numpy as np

from . import __version__
from .dual import Dual
from .errors import HYPOTHESIS_ERRORS, ParseError, SchemaError, SpecValueError
from .frenet import (
    MIN_SAMPLES,
    BaseCurveMoment,
    CurveSpec,
    FourierCurve,
    HyperboloidCircle,
    PointMoment,
    ZeroMoment,
    frenet,
    grid,
    pfaffian,
    sample_curve,
)
from .invariants import axis_invariants, pfaff_axis_invariants, axis_drall
from .minkowski import NULL_TOL, foot_point, linner
from .parallel import (
    bar_pfaffian,
    cbar_invariants,
    parallel_frame,
    v_axis_invariants,
    v_axis_invariants_nodrall,
)
from .verify import RelationReport

DEFAULT_SAMPLES = 1024
#: grid used by ``verify`` when neither the file nor the caller fixes one
VERIFY_SAMPLES = 2048
SURFACES = ("U1", "V1", "C", "Cbar")

_NUM = {"type": "number"}
_COEFFS = {"type": "array", "items": _NUM}
_COMPONENT = {
    "type": "object",
    "properties": {"cos": _COEFFS, "sin": _COEFFS},
    "additionalProperties": False,
}
_FOURIER = {"type": "array", "items": _COMPONENT, "minItems": 3, "maxItems": 3}

CURVE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["period", "director"],
    "additionalProperties": False,
    "properties": {
        "period": _NUM,
        "samples": {"type": "integer"},
        "director": {
            "oneOf": [
                {
                    "type": "object",
                    "required": ["kind", "a"],
                    "additionalProperties": False,
                    "properties": {"kind": {"const": "hyperboloid_circle"}, "a": _NUM},
                },
                {
                    "type": "object",
                    "required": ["kind", "components"],
                    "additionalProperties": False,
                    "properties": {"kind": {"const": "fourier"}, "components": _FOURIER},
                },
            ]
        },
        "moment": {
            "oneOf": [
                {
                    "type": "object",
                    "required": ["kind"],
                    "additionalProperties": False,
                    "properties": {"kind": {"const": "zero"}},
                },
                {
                    "type": "object",
                    "required": ["kind", "p"],
                    "additionalProperties": False,
                    "properties": {
                        "kind": {"const": "point"},
                        "p": {"type": "array", "items": _NUM, "minItems": 3, "maxItems": 3},
                    },
                },
                {
                    "type": "object",
                    "required": ["kind", "components"],
                    "additionalProperties": False,
                    "properties": {"kind": {"const": "base_curve"}, "components": _FOURIER},
                },
            ]
        },
        "phi": {
            "type": "object",
            "required": ["real", "dual"],
            "additionalProperties": False,
            "properties": {"real": _NUM, "dual": _NUM},
        },
    },
}


@dataclass(frozen=True)
class CurveFile:
    spec: CurveSpec
    samples: int = DEFAULT_SAMPLES
    phi: Dual | None = None
    samples_given: bool = False


def _fourier(components) -> FourierCurve:
    return FourierCurve([(c.get("cos", []), c.get("sin", [])) for c in components])


def _schema_error(err: jsonschema.ValidationError) -> SchemaError:
    """Most specific message; for a descriptor, the branch whose ``kind`` matched."""
    if err.validator == "oneOf" and err.context:
        branches = {}
        for sub in err.context:
            branches.setdefault(sub.schema_path[0], []).append(sub)
        matched = [
            errs for errs in branches.values()
            if not any(e.validator == "const" and list(e.relative_path) == ["kind"] for e in errs)
        ]
        if len(matched) == 1:
            return _schema_error(matched[0][0])
        if not matched:
            kinds = [b["properties"]["kind"]["const"] for b in err.schema["oneOf"]]
            path = "/".join(str(p) for p in err.absolute_path)
            return SchemaError(f"kind must be one of {kinds}", f"{path}/kind")
    path = "/".join(str(p) for p in err.absolute_path) or "$"
    return SchemaError(err.message, path)


def parse_curve_file(text) -> CurveFile:
    """Validate and convert the text of a curve file."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc
    validator = jsonschema.Draft202012Validator(CURVE_SCHEMA)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        raise _schema_error(errors[0])

    period = float(doc["period"])
    if not (math.isfinite(period) and period > 0):
        raise SpecValueError(f"must be positive, got {period!r}", "period")
    samples_given = "samples" in doc
    samples = int(doc.get("samples", DEFAULT_SAMPLES))
    if samples < MIN_SAMPLES:
        raise SpecValueError(f"must be at least {MIN_SAMPLES}, got {samples}", "samples")

    d = doc["director"]
    if d["kind"] == "hyperboloid_circle":
        if not math.isfinite(d["a"]) or d["a"] == 0:
            raise SpecValueError("a must be finite and nonzero", "director.a")
        director = HyperboloidCircle(float(d["a"]))
    else:
        director = _fourier(d["components"])

    m = doc.get("moment", {"kind": "zero"})
    if m["kind"] == "zero":
        moment = ZeroMoment()
    elif m["kind"] == "point":
        moment = PointMoment(tuple(float(x) for x in m["p"]))
    else:
        moment = BaseCurveMoment(_fourier(m["components"]))

    spec = CurveSpec(period, director, moment)
    e = director(grid(period, samples), period)
    bad = np.flatnonzero(linner(e, e) >= -NULL_TOL)
    if bad.size:
        raise SpecValueError(f"director is not timelike at node {int(bad[0])}", "director")

    phi = doc.get("phi")
    if phi is not None:
        phi = Dual(float(phi["real"]), float(phi["dual"]))
    return CurveFile(spec, samples, phi, samples_given)


def read_curve_file(path) -> CurveFile:
    with open(path, "rb") as fh:
        return parse_curve_file(fh.read())


# ---------------------------------------------------------------- reports


def _jsonable(x):
    if isinstance(x, Dual):
        return {"real": _jsonable(x.real), "dual": _jsonable(x.dual)}
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return [_jsonable(v) for v in x.tolist()]
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        x = float(x) + 0.0  # drops the sign of -0.0
        return x if math.isfinite(x) else None
    if isinstance(x, (str, type(None))):
        return x
    raise TypeError(f"cannot serialise {type(x).__name__}")


def emit_report(doc) -> str:
    """Serialise a report document; key order is the insertion order."""
    return json.dumps(_jsonable(doc), indent=2, allow_nan=False) + "\n"


def relations_doc(report: RelationReport) -> list:
    return [
        {
            "id": e.relation_id,
            "status": e.status,
            "pass": e.passed,
            "abs_residual": e.abs_residual,
            "rel_residual": e.rel_residual,
            "lhs": e.lhs,
            "rhs": e.rhs,
            "note": e.note,
            "variants": e.variants,
        }
        for e in report
    ]


def drall_summary(values) -> dict:
    v = np.asarray(values, dtype=float)
    ok = np.isfinite(v)
    if not ok.any():
        return {"min": None, "max": None, "mean": None, "singular_nodes": int(v.size)}
    return {
        "min": float(v[ok].min()),
        "max": float(v[ok].max()),
        "mean": float(v[ok].mean()),
        "singular_nodes": int((~ok).sum()),
    }


def _put_triple(out: dict, name: str, triple):
    out[f"Lambda_{name}"] = triple.Lambda
    out[f"lambda_{name}"] = triple.lam
    out[f"L_{name}"] = triple.L
    out[f"L_from_angle_{name}"] = triple.L_from_angle


def _surface(out: dict, skipped: dict, name: str, compute, drall_fallback=None):
    """Store one surface's invariants, or the reason they are unavailable."""
    try:
        triple = compute()
    except HYPOTHESIS_ERRORS as exc:
        skipped[name] = f"{type(exc).__name__}: {exc}"
        if drall_fallback is not None:
            try:
                out[f"drall_{name}"] = drall_summary(drall_fallback())
            except HYPOTHESIS_ERRORS:
                pass
        return
    _put_triple(out, name, triple)
    if triple.drall is not None:
        out[f"drall_{name}"] = drall_summary(triple.drall)


def _frame_surface(out, skipped, name, build):
    """Frame axes always have angle and pitch; only the drall may be singular."""
    _put_triple(out, name, build(False))
    try:
        out[f"drall_{name}"] = drall_summary(build(True).drall)
    except HYPOTHESIS_ERRORS as exc:
        skipped[f"drall_{name}"] = f"{type(exc).__name__}: {exc}"


def curve_summary(curve: CurveFile) -> dict:
    return {
        "family": curve.spec.director.kind,
        "moment": curve.spec.moment.kind,
        "samples": curve.samples,
        "period": curve.spec.period,
    }


def invariants_doc(curve: CurveFile, Phi=None) -> dict:
    """Invariants of the frame surfaces and axis C; with ``Phi`` also the
    parallel surfaces and axis C-bar."""
    frame = frenet(sample_curve(curve.spec, curve.samples), curve.spec.period)
    inv, skipped = {}, {}
    for a in ("U1", "U2", "U3"):
        _frame_surface(inv, skipped, a, lambda d, a=a: axis_invariants(frame, a, with_drall=d))

    pf_info = {}
    try:
        pf = pfaffian(frame)
        pf_info = {"case": pf.case.value}
        _surface(inv, skipped, "C", lambda: pfaff_axis_invariants(frame, pf), lambda: axis_drall(frame, pf))
    except HYPOTHESIS_ERRORS as exc:
        skipped["C"] = f"{type(exc).__name__}: {exc}"

    doc = {"version": __version__, "curve": curve_summary(curve)}
    if Phi is not None:
        Phi = Dual.of(Phi)
        doc["phi"] = Phi
        try:
            pframe = parallel_frame(frame, Phi)
        except HYPOTHESIS_ERRORS as exc:
            for a in ("V1", "V2", "V3", "Cbar"):
                skipped[a] = f"{type(exc).__name__}: {exc}"
        else:
            for a in ("V1", "V2", "V3"):
                _frame_surface(inv, skipped, a, lambda d, a=a: _v_triple(pframe, frame, a, d))
            try:
                pb = bar_pfaffian(pframe)
                pf_info["case_bar"] = pb.case.value
                _surface(inv, skipped, "Cbar", lambda: cbar_invariants(pframe, frame),
                         lambda: axis_drall(pframe, pb))
            except HYPOTHESIS_ERRORS as exc:
                skipped["Cbar"] = f"{type(exc).__name__}: {exc}"
    doc["pfaffian"] = pf_info
    doc["invariants"] = inv
    doc["skipped"] = skipped
    return doc


def _v_triple(pframe, frame, axis, with_drall):
    if with_drall:
        return v_axis_invariants(pframe, frame, axis)
    return v_axis_invariants_nodrall(pframe, int(axis[1]))


def verify_doc(curve: CurveFile, report: RelationReport, Phi, tol_abs, tol_rel, samples) -> dict:
    return {
        "version": __version__,
        "curve": {**curve_summary(curve), "samples": samples},
        "phi": Dual.of(Phi),
        "tolerances": {"abs": tol_abs, "rel": tol_rel},
        "summary": {
            "pass": sum(e.status == "pass" for e in report),
            "fail": sum(e.status == "fail" for e in report),
            "skipped": sum(e.status == "skipped" for e in report),
        },
        "relations": relations_doc(report),
    }


# ---------------------------------------------------------------- mesh


def surface_lines(curve: CurveFile, surface: str, Phi=None):
    """Unit dual vectors (one per node) of the requested ruled surface."""
    if surface not in SURFACES:
        raise SpecValueError(f"unknown surface {surface!r}, expected one of {SURFACES}", "surface")
    U = sample_curve(curve.spec, curve.samples)
    if surface == "U1":
        return U
    frame = frenet(U, curve.spec.period)
    if surface == "C":
        return pfaffian(frame).C
    pframe = parallel_frame(frame, Dual.of(0.0 if Phi is None else Phi))
    if surface == "V1":
        return pframe.V1
    return bar_pfaffian(pframe).C


def mesh_vertices(lines, half_width: float) -> np.ndarray:
    """``(2N, 3)`` vertices ``alpha(t_i) -/+ v e(t_i)`` of the ruling strips."""
    e = lines.real
    alpha = foot_point(lines)
    lo, hi = alpha - half_width * e, alpha + half_width * e
    return np.stack([lo, hi], axis=1).reshape(-1, 3)


def obj_text(vertices: np.ndarray) -> str:
    n = vertices.shape[0] // 2
    out = [f"v {x!r} {y!r} {z!r}" for x, y, z in vertices.tolist()]
    for i in range(n):
        j = (i + 1) % n
        out.append(f"f {2 * i + 1} {2 * i + 2} {2 * j + 2} {2 * j + 1}")
    return "\n".join(out) + "\n"


def atomic_write(path, text: str):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".part")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def export_mesh(curve: CurveFile, surface: str, half_width: float, path, Phi=None) -> np.ndarray:
    """Write the ruled surface as a Wavefront OBJ quad strip; returns the vertices."""
    if not (math.isfinite(half_width) and half_width > 0):
        raise SpecValueError(f"must be positive, got {half_width!r}", "half_width")
    verts = mesh_vertices(surface_lines(curve, surface, Phi), half_width)
    atomic_write(path, obj_text(verts))
    return verts
