"""Command line interface.

Exit status: 0 on success, 1 when the input is rejected, 2 when a
verification report contains failures.
"""

from __future__ import annotations

import argparse
import sys

from .dual import Dual
from .errors import DualRuledError
from .shell import (
    SURFACES,
    VERIFY_SAMPLES,
    emit_report,
    export_mesh,
    invariants_doc,
    read_curve_file,
    verify_doc,
)
from .verify import TOL_ABS, TOL_REL, verify_relations

EXIT_OK, EXIT_INVALID, EXIT_FAILED = 0, 1, 2


def _phi(args, curve) -> Dual:
    base = curve.phi if curve.phi is not None else Dual(0.0, 0.0)
    real = base.real if args.phi is None else args.phi
    dual = base.dual if args.phistar is None else args.phistar
    return Dual(real, dual)


class _Parser(argparse.ArgumentParser):
    """Usage errors are validation errors (exit 1); 2 is reserved for failed reports."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dualruled", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def phi_flags(sp):
        sp.add_argument("--phi", type=float, default=None, help="real part of the parallel angle")
        sp.add_argument("--phistar", type=float, default=None, help="dual part of the parallel angle")

    sp = sub.add_parser("invariants", help="invariants of the frame and Pfaffian axis surfaces")
    sp.add_argument("file")

    sp = sub.add_parser("parallel", help="invariants including the parallel surface")
    sp.add_argument("file")
    phi_flags(sp)

    sp = sub.add_parser("verify", help="two-path relation report")
    sp.add_argument("file")
    phi_flags(sp)
    sp.add_argument("--samples", type=int, default=None)
    sp.add_argument("--tol-abs", type=float, default=TOL_ABS)
    sp.add_argument("--tol-rel", type=float, default=TOL_REL)

    sp = sub.add_parser("mesh", help="export a ruled surface as Wavefront OBJ")
    sp.add_argument("file")
    sp.add_argument("--surface", choices=SURFACES, default="U1")
    sp.add_argument("--half-width", type=float, default=1.0)
    sp.add_argument("-o", "--output", required=True)
    phi_flags(sp)
    return p


def run(args) -> int:
    curve = read_curve_file(args.file)
    if args.command == "invariants":
        sys.stdout.write(emit_report(invariants_doc(curve)))
        return EXIT_OK
    if args.command == "parallel":
        sys.stdout.write(emit_report(invariants_doc(curve, _phi(args, curve))))
        return EXIT_OK
    if args.command == "verify":
        if args.samples is not None:
            n = args.samples
        else:
            n = curve.samples if curve.samples_given else VERIFY_SAMPLES
        Phi = _phi(args, curve)
        report = verify_relations(curve.spec, Phi, n, args.tol_abs, args.tol_rel)
        sys.stdout.write(emit_report(verify_doc(curve, report, Phi, args.tol_abs, args.tol_rel, n)))
        return EXIT_OK if report.ok else EXIT_FAILED
    export_mesh(curve, args.surface, args.half_width, args.output, _phi(args, curve))
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except (DualRuledError, ValueError, OSError) as exc:
        print(f"dualruled: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
