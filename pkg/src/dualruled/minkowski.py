"""Real and dual Lorentzian 3-vectors, signature (-, +, +).

Real vectors are plain numpy arrays with a trailing axis of length 3 (index 0
carries the negative sign). Dual vectors are :class:`DualVec3` pairs
``direction + eps*moment``; a unit dual vector is an oriented line (E. Study).

The cross product is ``a ^ b = J (a x b)`` with ``J = diag(-1, 1, 1)``, i.e.

    (a3 b2 - a2 b3,  a3 b1 - a1 b3,  a1 b2 - a2 b1)

so that ``<a ^ b, c> = det(a, b, c)`` and ``a ^ (b ^ c) = <a,b> c - <a,c> b``.
For a frame with ``U3 = U1 ^ U2`` (U1 timelike) this gives
``U2 ^ U3 = -U1`` and ``U3 ^ U1 = U2``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .dual import Dual, _is_plain
from .errors import NotALine, NullDirection

#: ``|<a,a>|`` at or below this is null
NULL_TOL = 1e-10
#: tolerance on ``<a, a*>`` for a dual vector to represent a line
LINE_TOL = 1e-9

METRIC = np.array([-1.0, 1.0, 1.0])


class CausalClass(enum.Enum):
    TIMELIKE = "timelike"
    SPACELIKE = "spacelike"
    NULL = "null"


def linner(a, b):
    """Lorentzian inner product ``-a0 b0 + a1 b1 + a2 b2`` over the last axis."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return -a[..., 0] * b[..., 0] + a[..., 1] * b[..., 1] + a[..., 2] * b[..., 2]


def lcross(a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    a1, a2, a3 = a[..., 0], a[..., 1], a[..., 2]
    b1, b2, b3 = b[..., 0], b[..., 1], b[..., 2]
    return np.stack([a3 * b2 - a2 * b3, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1], axis=-1)


@dataclass(frozen=True, eq=False)
class DualVec3:
    """Dual Lorentzian vector; both parts have shape ``(..., 3)``."""

    real: np.ndarray
    dual: np.ndarray

    __array_ufunc__ = None

    def __post_init__(self):
        real = np.asarray(self.real, dtype=float)
        dual = np.asarray(self.dual, dtype=float)
        if real.shape != dual.shape or real.shape[-1:] != (3,):
            raise ValueError(f"bad dual vector shapes {real.shape} / {dual.shape}")
        object.__setattr__(self, "real", real)
        object.__setattr__(self, "dual", dual)

    @classmethod
    def of(cls, real, dual=None) -> "DualVec3":
        real = np.asarray(real, dtype=float)
        return cls(real, np.zeros_like(real) if dual is None else dual)

    def __add__(self, other):
        if not isinstance(other, DualVec3):
            return NotImplemented
        return DualVec3(self.real + other.real, self.dual + other.dual)

    def __sub__(self, other):
        if not isinstance(other, DualVec3):
            return NotImplemented
        return DualVec3(self.real - other.real, self.dual - other.dual)

    def __neg__(self):
        return DualVec3(-self.real, -self.dual)

    def __mul__(self, s):
        if isinstance(s, Dual):
            sr = np.asarray(s.real)[..., None]
            sd = np.asarray(s.dual)[..., None]
            return DualVec3(sr * self.real, sr * self.dual + sd * self.real)
        if _is_plain(s):
            s = np.asarray(s, dtype=float)[..., None]
            return DualVec3(s * self.real, s * self.dual)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, s):
        if isinstance(s, Dual):
            return self * (1.0 / s)
        if _is_plain(s):
            return self * (1.0 / np.asarray(s, dtype=float))
        return NotImplemented

    def __getitem__(self, idx):
        return DualVec3(self.real[idx], self.dual[idx])

    def __len__(self):
        return len(self.real)

    @property
    def shape(self):
        return self.real.shape

    def inner(self, other: "DualVec3") -> Dual:
        return dinner(self, other)

    def cross(self, other: "DualVec3") -> "DualVec3":
        return dcross(self, other)


def dinner(A: DualVec3, B: DualVec3) -> Dual:
    """``<a,b> + eps(<a,b*> + <a*,b>)``."""
    return Dual(linner(A.real, B.real), linner(A.real, B.dual) + linner(A.dual, B.real))


def dcross(A: DualVec3, B: DualVec3) -> DualVec3:
    """``a^b + eps(a^b* + a*^b)``."""
    return DualVec3(lcross(A.real, B.real), lcross(A.real, B.dual) + lcross(A.dual, B.real))


def ddet(A: DualVec3, B: DualVec3, C: DualVec3) -> Dual:
    """Dual extension of ``det(a, b, c) = <a ^ b, c>``."""
    return dinner(dcross(A, B), C)


def dnorm(A: DualVec3, null_tol: float = NULL_TOL) -> Dual:
    """``||A||`` with ``||A||**2 = |<A,A>|`` as a dual identity.

    The dual part is ``+<a,a*>/||a||`` for spacelike and ``-<a,a*>/||a||`` for
    timelike directions.
    """
    aa = linner(A.real, A.real)
    if np.any(np.abs(aa) <= null_tol):
        raise NullDirection("norm of a dual vector with null direction")
    real = np.sqrt(np.abs(aa))
    return Dual(real, np.sign(aa) * linner(A.real, A.dual) / real)


def causal(A, null_tol: float = NULL_TOL) -> CausalClass:
    a = A.real if isinstance(A, DualVec3) else np.asarray(A, dtype=float)
    aa = float(linner(a, a))
    if aa < -null_tol:
        return CausalClass.TIMELIKE
    if aa > null_tol:
        return CausalClass.SPACELIKE
    return CausalClass.NULL


def line_to_dual(p, e, null_tol: float = NULL_TOL) -> DualVec3:
    """Dual vector of the line through ``p`` with direction ``e``: ``e + eps p^e``."""
    e = np.asarray(e, dtype=float)
    if np.any(np.abs(linner(e, e)) <= null_tol):
        raise NullDirection("line direction is null")
    return DualVec3(e, lcross(p, e))


def foot_point(U: DualVec3, null_tol: float = NULL_TOL, line_tol: float = LINE_TOL):
    """Point of the line ``U`` that is Lorentz-orthogonal to its direction."""
    a, m = U.real, U.dual
    aa = linner(a, a)
    if np.any(np.abs(aa) <= null_tol):
        raise NullDirection("line direction is null")
    scale = np.maximum(1.0, np.linalg.norm(a, axis=-1) * np.linalg.norm(m, axis=-1))
    if np.any(np.abs(linner(a, m)) > line_tol * scale):
        raise NotALine("<direction, moment> is not zero")
    return -lcross(a, m) / np.asarray(aa)[..., None]
