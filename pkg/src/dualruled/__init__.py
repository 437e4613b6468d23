"""Closed ruled surfaces in dual Lorentzian space.

Ruled surfaces are handled as closed curves of unit dual vectors (oriented
lines). The package builds the dual Frenet frame of such a curve, the
integral invariants of the frame and axis surfaces, the parallel ruled
surface at a fixed dual angle, and a two-path verification report.
"""

__version__ = "0.1.0"

from .dual import Dual
from .minkowski import DualVec3
from .frenet import CurveSpec, HyperboloidCircle, FourierCurve, frenet, sample_curve
from .parallel import parallel_frame

__all__ = [
    "__version__",
    "Dual",
    "DualVec3",
    "CurveSpec",
    "HyperboloidCircle",
    "FourierCurve",
    "frenet",
    "sample_curve",
    "parallel_frame",
]
