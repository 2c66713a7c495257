"""Two-component scalar rings a + u*b with u**2 in {-1, 0, +1}.

The three rings are the complex numbers (u = i), the dual numbers (u = eps)
and the split-complex / hyperbolic numbers (u = j). A single ``Scalar`` type
carries the ring as a runtime tag; ``a`` and ``b`` may be floats or numpy
arrays of a common broadcastable shape, so every operation also works on
batches.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

ABS_TOL = 1e-12
REL_TOL = 1e-12
# arccos/arccosh arguments within this distance of the domain edge are clamped
CLAMP_TOL = 1e-9


class DomainError(ValueError):
    """Raised when an input lies outside the domain of an operation."""

    def __init__(self, message, value=None):
        super().__init__(message)
        self.value = value


class UnitKind(enum.IntEnum):
    """Which ring: the integer value is u**2."""

    COMPLEX = -1
    DUAL = 0
    SPLIT = 1

    @property
    def sigma(self) -> int:
        return int(self)

    @property
    def symbol(self) -> str:
        return {-1: "i", 0: "eps", 1: "j"}[self.value]

    @property
    def label(self) -> str:
        return self.name.lower()

    @classmethod
    def parse(cls, value) -> "UnitKind":
        """Accept a UnitKind, an int sigma, or one of 'complex'/'dual'/'split'."""
        if isinstance(value, cls):
            return value
        if isinstance(value, str):
            try:
                return cls[value.strip().upper()]
            except KeyError:
                raise DomainError(f"unknown algebra {value!r}", value) from None
        try:
            return cls(int(value))
        except (TypeError, ValueError):
            raise DomainError(f"unknown unit kind {value!r}", value) from None


COMPLEX = UnitKind.COMPLEX
DUAL = UnitKind.DUAL
SPLIT = UnitKind.SPLIT
KINDS = (COMPLEX, DUAL, SPLIT)


def _check_same(x: "Scalar", y: "Scalar") -> UnitKind:
    if x.kind != y.kind:
        raise DomainError(f"ring mismatch: {x.kind.label} vs {y.kind.label}")
    return x.kind


@dataclass(frozen=True, eq=False)
class Scalar:
    """Element a + u*b of one of the rings C, D, S."""

    kind: UnitKind
    a: np.ndarray | float
    b: np.ndarray | float = 0.0

    __array_ufunc__ = None

    def __post_init__(self):
        object.__setattr__(self, "kind", UnitKind.parse(self.kind))

    @property
    def shape(self) -> tuple:
        return np.broadcast(self.a, self.b).shape

    def __repr__(self):
        return f"Scalar({self.kind.label}: {self.a!r} + {self.kind.symbol}*{self.b!r})"

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            _check_same(self, other)
            return other
        return Scalar(self.kind, other, 0.0)

    def __add__(self, other):
        other = self._coerce(other)
        return Scalar(self.kind, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return Scalar(self.kind, self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return Scalar(self.kind, -self.a, -self.b)

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return ring_mul(self, other)
        if isinstance(other, (int, float, np.floating, np.integer, np.ndarray)):
            return Scalar(self.kind, self.a * other, self.b * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer, np.ndarray)):
            return Scalar(self.kind, other * self.a, other * self.b)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Scalar):
            return ring_mul(self, ring_inv(other))
        return Scalar(self.kind, self.a / other, self.b / other)

    def __getitem__(self, index):
        a, b = np.broadcast_arrays(self.a, self.b)
        return Scalar(self.kind, a[index], b[index])

    def conj(self) -> "Scalar":
        return ring_conj(self)

    def norm2(self):
        """Ring norm a**2 - sigma*b**2, equal to x * conj(x)."""
        return self.a * self.a - self.kind.sigma * self.b * self.b

    def as_complex(self):
        if self.kind != COMPLEX:
            raise DomainError("only complex-ring scalars convert to Python complex")
        return np.asarray(self.a) + 1j * np.asarray(self.b)


def ring_mul(x: Scalar, y: Scalar) -> Scalar:
    kind = _check_same(x, y)
    return Scalar(kind, x.a * y.a + kind.sigma * x.b * y.b, x.a * y.b + x.b * y.a)


def ring_conj(x: Scalar) -> Scalar:
    return Scalar(x.kind, x.a, -x.b)


def is_invertible(x: Scalar, tol: float = ABS_TOL):
    """Elementwise test for |a**2 - sigma*b**2| > tol (dual: a != 0)."""
    return np.abs(x.norm2()) > tol


def ring_inv(x: Scalar) -> Scalar:
    n = x.norm2()
    if np.any(n == 0):
        raise DomainError(f"{x} is not invertible in the {x.kind.label} ring", x)
    return Scalar(x.kind, x.a / n, -x.b / n)


def cos_sin_u(kind: UnitKind, t):
    """Real factors c, s with cos(u*t) = c and sin(u*t) = u*s."""
    if kind == COMPLEX:
        return np.cosh(t), np.sinh(t)
    if kind == DUAL:
        t = np.asarray(t, dtype=float)
        return np.ones_like(t), t
    return np.cos(t), np.sin(t)


def ring_cos(z: Scalar) -> Scalar:
    c, s = cos_sin_u(z.kind, z.b)
    # cos(a + u b) = cos a cos(ub) - sin a sin(ub)
    return Scalar(z.kind, np.cos(z.a) * c, -np.sin(z.a) * s)


def ring_sin(z: Scalar) -> Scalar:
    c, s = cos_sin_u(z.kind, z.b)
    return Scalar(z.kind, np.sin(z.a) * c, np.cos(z.a) * s)


def ring_sqrt(x: Scalar) -> Scalar:
    """Principal square root (positive real part).

    Domains: complex, everything (principal branch); dual, a > 0;
    split, a > |b|. Anything else raises DomainError.
    """
    a = np.asarray(x.a, dtype=float)
    b = np.asarray(x.b, dtype=float)
    if x.kind == COMPLEX:
        # +0.0 turns a signed -0.0 imaginary part into +0.0 so -1 maps to +i
        r = np.sqrt(a + 1j * (b + 0.0))
        return Scalar(x.kind, r.real, r.imag)
    if x.kind == DUAL:
        if np.any(a <= 0):
            raise DomainError(f"dual sqrt needs a positive real part, got {x}", x)
        ra = np.sqrt(a)
        return Scalar(x.kind, ra, b / (2 * ra))
    if np.any(a <= np.abs(b)):
        raise DomainError(f"split sqrt needs a > |b|, got {x}", x)
    p = np.sqrt(a + b)
    m = np.sqrt(a - b)
    return Scalar(x.kind, (p + m) / 2, (p - m) / 2)


def ring_angle_from_cos_sin(c: Scalar, s_norm=None, tol: float = CLAMP_TOL):
    """Recover gamma >= 0 from the real part of cos(u*gamma).

    ``s_norm`` is the magnitude of the sine factor, |sin(u*gamma)/u|. It is
    mandatory for the dual ring, where cos(eps*gamma) = 1 carries no
    information. For the complex and split rings it is optional; when given,
    the angle is computed from both parts, which stays accurate for small
    angles where arccos/arccosh lose half the digits.
    """
    ca = np.asarray(c.a, dtype=float)
    kind = c.kind
    if np.any(np.abs(c.b) > tol * np.maximum(1.0, np.abs(ca))):
        raise DomainError(f"cos(u*gamma) must be real, got {c}", c)
    if kind == COMPLEX:
        if np.any(ca < 1 - tol):
            raise DomainError(f"cosh argument below 1: {c}", c)
        ca = np.maximum(ca, 1.0)
        if s_norm is None:
            return np.arccosh(ca)
        # cosh g + sinh g = exp(g)
        return np.log1p((ca - 1.0) + np.abs(s_norm))
    if kind == DUAL:
        if np.any(np.abs(ca - 1) > tol):
            raise DomainError(f"dual cosine must be 1, got {c}", c)
        if s_norm is None:
            raise DomainError("the dual ring needs s_norm to recover an angle")
        return np.abs(np.asarray(s_norm, dtype=float))
    if np.any(np.abs(ca) > 1 + tol):
        raise DomainError(f"cos argument outside [-1, 1]: {c}", c)
    ca = np.clip(ca, -1.0, 1.0)
    if s_norm is None:
        return np.arccos(ca)
    return np.arctan2(np.abs(s_norm), ca)


def isclose(x, y, abs_tol: float = ABS_TOL, rel_tol: float = REL_TOL):
    """Elementwise |x - y| <= max(abs_tol, rel_tol * max(|x|, |y|))."""
    x = np.asarray(x)
    y = np.asarray(y)
    scale = np.maximum(np.abs(x), np.abs(y))
    return np.abs(x - y) <= np.maximum(abs_tol, rel_tol * scale)
