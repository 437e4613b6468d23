"""Dual numbers ``a + eps*a*`` with ``eps**2 = 0``.

Here ``eps`` is the line-geometry dual unit: the real part is an angle (or a
cosine), the dual part is a distance. It is *not* a derivative-tracking
infinitesimal for the curve parameter, so smooth functions are lifted from
explicit ``(f, f')`` pairs rather than through any autodiff machinery.

Both parts may be numpy arrays of the same shape, in which case a single
:class:`Dual` holds one dual number per grid node.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from .errors import DivisionByPureDual, DomainError, NonFiniteError

#: smallest admissible ``|real|`` of a divisor
DIVISOR_TOL = 1e-12

Scalar = Union[float, np.ndarray]


def _coerce(x) -> Scalar:
    if np.ndim(x) == 0:
        return float(x)
    return np.asarray(x, dtype=float)


@dataclass(frozen=True, eq=False)
class Dual:
    """Dual scalar (or array of dual scalars)."""

    real: Scalar
    dual: Scalar = 0.0

    # make ``ndarray * Dual`` dispatch to Dual.__rmul__
    __array_ufunc__ = None

    def __post_init__(self):
        real, dual = _coerce(self.real), _coerce(self.dual)
        if not (np.all(np.isfinite(real)) and np.all(np.isfinite(dual))):
            raise NonFiniteError("dual number with non-finite component")
        object.__setattr__(self, "real", real)
        object.__setattr__(self, "dual", dual)

    @classmethod
    def of(cls, x) -> "Dual":
        return x if isinstance(x, Dual) else cls(x, np.zeros_like(_coerce(x)))

    # arithmetic
    def __add__(self, other):
        if isinstance(other, Dual):
            return Dual(self.real + other.real, self.dual + other.dual)
        if _is_plain(other):
            return Dual(self.real + other, self.dual)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Dual(-self.real, -self.dual)

    def __sub__(self, other):
        if isinstance(other, Dual):
            return Dual(self.real - other.real, self.dual - other.dual)
        if _is_plain(other):
            return Dual(self.real - other, self.dual)
        return NotImplemented

    def __rsub__(self, other):
        if _is_plain(other):
            return Dual(other - self.real, -self.dual)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Dual):
            return dmul(self, other)
        if _is_plain(other):
            return Dual(self.real * other, self.dual * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Dual):
            return ddiv(self, other)
        if _is_plain(other):
            return Dual(self.real / other, self.dual / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if _is_plain(other):
            return ddiv(Dual.of(other), self)
        return NotImplemented

    # array helpers
    def __getitem__(self, idx):
        return Dual(np.asarray(self.real)[idx], np.asarray(self.dual)[idx])

    def __len__(self):
        return len(np.asarray(self.real))

    @property
    def shape(self):
        return np.shape(self.real)

    def sum(self) -> "Dual":
        return Dual(np.sum(self.real), np.sum(self.dual))

    def mean(self) -> "Dual":
        return Dual(np.mean(self.real), np.mean(self.dual))

    def __repr__(self):
        return f"Dual({self.real!r}, {self.dual!r})"


def _is_plain(x) -> bool:
    return isinstance(x, (int, float, np.floating, np.integer, np.ndarray))


def dmul(a: Dual, b: Dual) -> Dual:
    """Product rule ``ab + eps(a b* + a* b)``."""
    return Dual(a.real * b.real, a.real * b.dual + a.dual * b.real)


def ddiv(a: Dual, b: Dual, tol: float = DIVISOR_TOL) -> Dual:
    """Quotient ``a / b``; the divisor must have a non-negligible real part."""
    if np.any(np.abs(b.real) <= tol):
        raise DivisionByPureDual(f"divisor real part within {tol:g} of zero")
    real = a.real / b.real
    return Dual(real, (a.dual * b.real - a.real * b.dual) / (b.real * b.real))


def dlift(
    f: Callable, fprime: Callable, a: Dual, domain: Callable | None = None, name: str = "f"
) -> Dual:
    """Lift a smooth real function: ``f(a) + eps * a* * f'(a)``.

    ``domain`` is an optional predicate on the real part; any node for which
    it is false raises :class:`DomainError`.
    """
    if domain is not None:
        ok = np.asarray(domain(a.real))
        if not np.all(ok):
            bad = np.flatnonzero(~ok.ravel())
            raise DomainError(f"{name}: real part outside domain at index {int(bad[0])}")
    return Dual(f(a.real), a.dual * fprime(a.real))


def sinh(a: Dual) -> Dual:
    return dlift(np.sinh, np.cosh, Dual.of(a), name="sinh")


def cosh(a: Dual) -> Dual:
    return dlift(np.cosh, np.sinh, Dual.of(a), name="cosh")


def tanh(a: Dual) -> Dual:
    return dlift(np.tanh, lambda x: 1.0 / np.cosh(x) ** 2, Dual.of(a), name="tanh")


def artanh(a: Dual) -> Dual:
    return dlift(
        np.arctanh,
        lambda x: 1.0 / (1.0 - x * x),
        Dual.of(a),
        domain=lambda x: np.abs(x) < 1.0,
        name="artanh",
    )


def sqrt(a: Dual) -> Dual:
    return dlift(
        np.sqrt,
        lambda x: 0.5 / np.sqrt(x),
        Dual.of(a),
        domain=lambda x: x > 0.0,
        name="sqrt",
    )


ZERO = Dual(0.0, 0.0)
ONE = Dual(1.0, 0.0)
