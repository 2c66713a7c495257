"""Quaternions over C, D or S, stored as q = alpha + u*beta.

``alpha`` and ``beta`` are real quaternions and u is the central unit of the
chosen ring (u**2 = sigma). Biquaternions, dual quaternions and split
biquaternions are the three values of ``kind``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .quat import Quaternion, quat_conj, quat_inner, quat_mul
from .rings import (
    COMPLEX,
    DUAL,
    SPLIT,
    DomainError,
    Scalar,
    UnitKind,
    is_invertible,
    ring_sqrt,
)

UNIT_TOL = 1e-10
# below this |beta'| the boost factor of a decomposition is taken to be 1
BETA_ZERO_TOL = 1e-12

_REAL = (int, float, np.floating, np.integer, np.ndarray)


@dataclass(frozen=True, eq=False)
class ExtQuaternion:
    kind: UnitKind
    alpha: Quaternion
    beta: Quaternion

    __array_ufunc__ = None

    def __post_init__(self):
        object.__setattr__(self, "kind", UnitKind.parse(self.kind))
        if not isinstance(self.alpha, Quaternion):
            object.__setattr__(self, "alpha", Quaternion(self.alpha))
        if not isinstance(self.beta, Quaternion):
            object.__setattr__(self, "beta", Quaternion(self.beta))

    @classmethod
    def one(cls, kind, shape=()) -> "ExtQuaternion":
        alpha = np.zeros(tuple(shape) + (4,))
        alpha[..., 0] = 1.0
        return cls(kind, alpha, np.zeros(tuple(shape) + (4,)))

    @classmethod
    def real(cls, kind, q: Quaternion) -> "ExtQuaternion":
        """Embed a real quaternion (beta = 0)."""
        return cls(kind, q, Quaternion(np.zeros_like(q.data)))

    @classmethod
    def from_scalar(cls, z: Scalar) -> "ExtQuaternion":
        return cls(z.kind, Quaternion.scalar(z.a), Quaternion.scalar(z.b))

    @property
    def shape(self) -> tuple:
        return np.broadcast_shapes(self.alpha.shape, self.beta.shape)

    @property
    def sigma(self) -> int:
        return self.kind.sigma

    def coefficients(self) -> Scalar:
        """The four ring coefficients q_k = alpha_k + u*beta_k as one Scalar."""
        return Scalar(self.kind, self.alpha.data, self.beta.data)

    def scalar_part(self) -> Scalar:
        return Scalar(self.kind, self.alpha.w, self.beta.w)

    def vector_part(self) -> "ExtQuaternion":
        return ExtQuaternion(self.kind, self.alpha.vector_part(), self.beta.vector_part())

    def __repr__(self):
        return (
            f"ExtQuaternion({self.kind.label}, alpha={self.alpha.data.tolist()}, "
            f"beta={self.beta.data.tolist()})"
        )

    def __getitem__(self, index):
        alpha = Quaternion(np.broadcast_to(self.alpha.data, self.shape + (4,)))
        beta = Quaternion(np.broadcast_to(self.beta.data, self.shape + (4,)))
        return ExtQuaternion(self.kind, alpha[index], beta[index])

    def _same(self, other: "ExtQuaternion"):
        if other.kind != self.kind:
            raise DomainError(f"algebra mismatch: {self.kind.label} vs {other.kind.label}")

    def __add__(self, other):
        if isinstance(other, ExtQuaternion):
            self._same(other)
            return ExtQuaternion(self.kind, self.alpha + other.alpha, self.beta + other.beta)
        if isinstance(other, Scalar):
            return self + ExtQuaternion.from_scalar(other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return ExtQuaternion(self.kind, -self.alpha, -self.beta)

    def __mul__(self, other):
        if isinstance(other, ExtQuaternion):
            return ext_mul(self, other)
        if isinstance(other, Scalar):
            return scale(self, other)
        if isinstance(other, _REAL):
            return ExtQuaternion(self.kind, self.alpha * other, self.beta * other)
        return NotImplemented

    def __rmul__(self, other):
        # ring scalars are central, so left and right scaling agree
        if isinstance(other, Scalar):
            return scale(self, other)
        if isinstance(other, _REAL):
            return ExtQuaternion(self.kind, other * self.alpha, other * self.beta)
        return NotImplemented

    def star(self) -> "ExtQuaternion":
        return inv_star(self)

    def bar(self) -> "ExtQuaternion":
        return inv_bar(self)

    def barstar(self) -> "ExtQuaternion":
        return inv_barstar(self)


def ext_mul(p: ExtQuaternion, q: ExtQuaternion) -> ExtQuaternion:
    p._same(q)
    sigma = p.sigma
    alpha = quat_mul(p.alpha, q.alpha)
    if sigma:
        alpha = alpha + sigma * quat_mul(p.beta, q.beta)
    beta = quat_mul(p.alpha, q.beta) + quat_mul(p.beta, q.alpha)
    return ExtQuaternion(p.kind, alpha, beta)


def scale(q: ExtQuaternion, z: Scalar) -> ExtQuaternion:
    """Multiply by a ring scalar z = a + u*b."""
    if z.kind != q.kind:
        raise DomainError(f"algebra mismatch: {q.kind.label} vs {z.kind.label}")
    a = np.asarray(z.a, dtype=float)
    b = np.asarray(z.b, dtype=float)
    alpha = a * q.alpha
    if q.sigma:
        alpha = alpha + (q.sigma * b) * q.beta
    return ExtQuaternion(q.kind, alpha, a * q.beta + b * q.alpha)


def inv_star(q: ExtQuaternion) -> ExtQuaternion:
    return ExtQuaternion(q.kind, q.alpha, -q.beta)


def inv_bar(q: ExtQuaternion) -> ExtQuaternion:
    return ExtQuaternion(q.kind, quat_conj(q.alpha), quat_conj(q.beta))


def inv_barstar(q: ExtQuaternion) -> ExtQuaternion:
    return ExtQuaternion(q.kind, quat_conj(q.alpha), -quat_conj(q.beta))


def bilinear(p: ExtQuaternion, q: ExtQuaternion) -> Scalar:
    """<p, q> = Sc(p * bar(q)), a ring scalar."""
    return ext_mul(p, inv_bar(q)).scalar_part()


def qform(q: ExtQuaternion) -> Scalar:
    return bilinear(q, q)


def qform_components(q: ExtQuaternion) -> Scalar:
    """Q(q) from the closed form |alpha|^2 + sigma|beta|^2 + 2u<alpha, beta>."""
    return Scalar(
        q.kind,
        q.alpha.norm2() + q.sigma * q.beta.norm2(),
        2.0 * quat_inner(q.alpha, q.beta),
    )


def is_null(q: ExtQuaternion, tol: float = 1e-12):
    """Elementwise Q(q) == 0 within ``tol`` on both ring components."""
    z = qform(q)
    return (np.abs(z.a) <= tol) & (np.abs(z.b) <= tol)


def null_by_components(q: ExtQuaternion, tol: float = 1e-12):
    """The same predicate through the per-ring characterisation of Q(q) = 0.

    complex: |alpha| = |beta| and <alpha, beta> = 0; dual: alpha = 0;
    split: q = 0.
    """
    na = q.alpha.norm()
    nb = q.beta.norm()
    if q.kind == COMPLEX:
        return (np.abs(na - nb) <= tol) & (np.abs(quat_inner(q.alpha, q.beta)) <= tol)
    if q.kind == DUAL:
        return na <= tol
    return (na <= tol) & (nb <= tol)


def degeneracy(q: ExtQuaternion) -> str | None:
    """Name the reason Q(q) is not invertible, or None when it is."""
    z = qform(q)
    if np.all(is_invertible(z)):
        return None
    if q.kind == COMPLEX:
        return "null biquaternion: |alpha| = |beta| and <alpha, beta> = 0"
    if q.kind == DUAL:
        return "pure dual part: alpha = 0, q = eps*beta"
    if np.all(null_by_components(q)):
        return "zero split biquaternion"
    return "split zero divisor: Q(q) = a + j*b with a = +-b"


def unit_error(q: ExtQuaternion):
    """|Q(q) - 1| relative to the size of the terms forming it."""
    z = qform(q)
    size = np.maximum(1.0, q.alpha.norm2() + abs(q.sigma) * q.beta.norm2())
    return np.maximum(np.abs(z.a - 1.0), np.abs(z.b)) / size


def require_unit(q: ExtQuaternion, tol: float = UNIT_TOL) -> ExtQuaternion:
    err = unit_error(q)
    if np.any(err > tol):
        raise DomainError(f"Q(q) != 1 (error {np.max(err):.3g} > {tol:g})", q)
    return q


def angle_cos(p: ExtQuaternion, q: ExtQuaternion) -> Scalar:
    """cos(z) = <p, q> / (sqrt(Q(p)) sqrt(Q(q))), the angle between p and q."""
    return bilinear(p, q) / (ring_sqrt(qform(p)) * ring_sqrt(qform(q)))


class Polar(NamedTuple):
    r: Scalar
    cos: Scalar
    sin: Scalar
    qhat: ExtQuaternion


def polar(q: ExtQuaternion) -> Polar:
    """q = r (cos z + qhat sin z) with r = sqrt(Q(q)), Q(qhat) = 1, qhat^2 = -1.

    Square roots take the principal branch of ``ring_sqrt``. When the vector
    part vanishes, sin z = 0 and qhat defaults to i1.
    """
    reason = degeneracy(q)
    if reason is not None:
        raise DomainError(f"Q(q) is not invertible ({reason})", q)
    r = ring_sqrt(qform(q))
    cos_z = q.scalar_part() / r
    vec = q.vector_part()
    zero_vec = (vec.alpha.norm2() + vec.beta.norm2()) == 0.0
    if np.all(zero_vec):
        qhat = ExtQuaternion.real(q.kind, Quaternion(np.broadcast_to([0.0, 1.0, 0.0, 0.0], q.shape + (4,))))
        return Polar(r, cos_z, Scalar(q.kind, np.zeros(q.shape), np.zeros(q.shape)), qhat)
    if np.any(zero_vec):
        raise DomainError("mixed batch of zero and non-zero vector parts; call polar per element")
    qv = qform(vec)
    if not np.all(is_invertible(qv)):
        raise DomainError(f"Q(vec q) is not invertible ({degeneracy(vec)})", q)
    root = ring_sqrt(qv)
    qhat = scale(vec, _inv(root))
    return Polar(r, cos_z, root / r, qhat)


def _inv(z: Scalar) -> Scalar:
    n = z.norm2()
    return Scalar(z.kind, z.a / n, -z.b / n)


@dataclass(frozen=True, eq=False)
class Decomposition:
    """q = q_r * q_b with q_r real (star-fixed) and q_b a minquat (bar = star)."""

    q_r: ExtQuaternion
    q_b: ExtQuaternion
    theta: np.ndarray | float

    def product(self) -> ExtQuaternion:
        return ext_mul(self.q_r, self.q_b)


def _orthogonal_unit(b: np.ndarray) -> np.ndarray:
    """A unit 4-vector orthogonal to the unit 4-vector ``b``, seeded by the
    basis element along b's smallest component."""
    k = np.argmin(np.abs(b), axis=-1)
    e = np.zeros_like(b)
    np.put_along_axis(e, k[..., None], 1.0, axis=-1)
    v = e - np.take_along_axis(b, k[..., None], axis=-1) * b
    return v / np.linalg.norm(v, axis=-1, keepdims=True)


def decompose(q: ExtQuaternion, tol: float = UNIT_TOL) -> Decomposition:
    """Split a unit element into a rotor times a boost-like factor.

    With q = alpha' + u*beta', the rotor is q_r = alpha'/|alpha'| and the
    second factor is q_b = cos(u*theta) + sin(u*theta) * Vec(bar(q_r) beta'/|beta'|)
    where |alpha'| = cos(u*theta) and |beta'| u = sin(u*theta). theta is
    reported in [0, inf) for the complex and dual rings and in [0, pi/2] for
    the split ring. Works on batches.
    """
    require_unit(q, tol)
    kind = q.kind
    a = np.broadcast_to(q.alpha.data, q.shape + (4,))
    b = np.broadcast_to(q.beta.data, q.shape + (4,))
    na = np.linalg.norm(a, axis=-1)
    nb = np.linalg.norm(b, axis=-1)
    degenerate = nb <= BETA_ZERO_TOL

    if kind == COMPLEX:
        theta = np.arcsinh(nb)
    elif kind == DUAL:
        theta = nb
    else:
        theta = np.arctan2(nb, na)
    theta = np.where(degenerate, 0.0, theta)

    b_hat = b / np.where(degenerate, 1.0, nb)[..., None]
    r = a / np.where(na > 0, na, 1.0)[..., None]
    if kind == SPLIT:
        # |alpha'| can vanish here; build the rotor from the beta side instead
        from_beta = (na < nb) & ~degenerate
        if np.any(from_beta):
            a_perp = a - np.sum(a * b_hat, axis=-1, keepdims=True) * b_hat
            n_perp = np.linalg.norm(a_perp, axis=-1, keepdims=True)
            alt = np.where(n_perp > BETA_ZERO_TOL, a_perp / np.where(n_perp > 0, n_perp, 1.0), _orthogonal_unit(b_hat))
            r = np.where(from_beta[..., None], alt, r)

    q_r_quat = Quaternion(r)
    axis = quat_mul(quat_conj(q_r_quat), Quaternion(b_hat)).vec
    if kind == DUAL:
        c, s = np.ones_like(nb), nb
    else:
        c, s = na, nb
    c = np.where(degenerate, 1.0, c)
    s = np.where(degenerate, 0.0, s)
    axis = np.where(degenerate[..., None], 0.0, axis)

    q_r = ExtQuaternion.real(kind, q_r_quat)
    q_b = ExtQuaternion(kind, Quaternion.scalar(c), Quaternion.vector(s[..., None] * axis))
    if q_b.shape == ():
        theta = float(theta)
    return Decomposition(q_r, q_b, theta)

