"""The sandwich action T_q(v) = q v barstar(q) on minquats.

A minquat is v = v0 + u*(v1 i1 + v2 i2 + v3 i3); its real coordinates are
(v0, v1, v2, v3), so every matrix here is real with u absorbed into the
coordinate convention. The quadratic form reads v0^2 + sigma*|v_vec|^2:
Minkowski for the complex ring, degenerate Galilean for dual numbers, and
Euclidean for split numbers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .extquat import ExtQuaternion, ext_mul, inv_barstar, require_unit
from .quat import Quaternion
from .rings import DomainError, UnitKind, cos_sin_u

APPLY_UNIT_TOL = 1e-8
MINQUAT_TOL = 1e-10
# adapted-basis Gram-Schmidt skips seeds whose residual is shorter than this
PARALLEL_TOL = 1e-6


@dataclass(frozen=True, eq=False)
class Minquat:
    kind: UnitKind
    coords: np.ndarray

    __array_ufunc__ = None

    def __post_init__(self):
        object.__setattr__(self, "kind", UnitKind.parse(self.kind))
        coords = np.asarray(self.coords, dtype=float)
        if coords.shape[-1:] != (4,):
            raise ValueError(f"minquat coordinates need a trailing axis of 4, got {coords.shape}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def from_parts(cls, kind, v0, vec) -> "Minquat":
        return cls(kind, Quaternion.from_parts(v0, vec).data)

    @classmethod
    def from_ext(cls, q: ExtQuaternion, tol: float | None = MINQUAT_TOL) -> "Minquat":
        """Read v0 + u*v_vec off an element with star(q) == bar(q).

        The discarded parts (vector of alpha, scalar of beta) must be below
        ``tol`` relative to the kept ones; ``tol=None`` skips the check.
        """
        a = np.broadcast_to(q.alpha.data, q.shape + (4,))
        b = np.broadcast_to(q.beta.data, q.shape + (4,))
        if tol is not None:
            stray = np.maximum(np.abs(a[..., 1:]).max(axis=-1), np.abs(b[..., 0]))
            size = np.maximum(1.0, np.maximum(np.abs(a[..., 0]), np.abs(b[..., 1:]).max(axis=-1)))
            if np.any(stray > tol * size):
                raise DomainError("element is not a minquat (star(q) != bar(q))", q)
        coords = np.concatenate([a[..., :1], b[..., 1:]], axis=-1)
        return cls(q.kind, coords)

    @property
    def shape(self) -> tuple:
        return self.coords.shape[:-1]

    @property
    def v0(self):
        return self.coords[..., 0]

    @property
    def vec(self) -> Quaternion:
        return Quaternion.vector(self.coords[..., 1:])

    def to_ext(self) -> ExtQuaternion:
        alpha = np.zeros_like(self.coords)
        alpha[..., 0] = self.coords[..., 0]
        beta = self.coords.copy()
        beta[..., 0] = 0.0
        return ExtQuaternion(self.kind, alpha, beta)

    def qform(self):
        v = self.coords
        return v[..., 0] ** 2 + self.kind.sigma * np.sum(v[..., 1:] ** 2, axis=-1)

    def __getitem__(self, index):
        if not isinstance(index, tuple):
            index = (index,)
        return Minquat(self.kind, self.coords[index + (Ellipsis, slice(None))])

    def __neg__(self):
        return Minquat(self.kind, -self.coords)

    def __repr__(self):
        return f"Minquat({self.kind.label}, {self.coords.tolist()!r})"


def metric(kind) -> np.ndarray:
    """Diagonal Gram matrix diag(1, sigma, sigma, sigma) in real coordinates."""
    s = UnitKind.parse(kind).sigma
    return np.diag([1.0, s, s, s])


def sandwich(q: ExtQuaternion, x: ExtQuaternion) -> ExtQuaternion:
    """Raw q x barstar(q), no projection back onto the minquats."""
    return ext_mul(ext_mul(q, x), inv_barstar(q))


def apply(q: ExtQuaternion, v: Minquat) -> Minquat:
    if q.kind != v.kind:
        raise DomainError(f"algebra mismatch: {q.kind.label} vs {v.kind.label}")
    require_unit(q, APPLY_UNIT_TOL)
    return Minquat.from_ext(sandwich(q, v.to_ext()), tol=None)


def compose(p: ExtQuaternion, q: ExtQuaternion) -> ExtQuaternion:
    """The unit element acting as T_p after T_q."""
    require_unit(p, APPLY_UNIT_TOL)
    require_unit(q, APPLY_UNIT_TOL)
    return require_unit(ext_mul(p, q), APPLY_UNIT_TOL)


def inverse(q: ExtQuaternion) -> ExtQuaternion:
    """For Q(q) = 1 the inverse is bar(q)."""
    require_unit(q, APPLY_UNIT_TOL)
    return q.bar()


def _unit_axis(axis) -> np.ndarray:
    if isinstance(axis, Quaternion):
        axis = axis.vec
    axis = np.asarray(axis, dtype=float)
    n = np.linalg.norm(axis, axis=-1, keepdims=True)
    if np.any(n == 0):
        raise DomainError("rotation/translation axis must be non-zero", axis)
    return axis / n


def make_rotor(kind, axis, theta) -> ExtQuaternion:
    """cos(theta/2) + axis sin(theta/2): spatial rotation by theta about axis."""
    axis = _unit_axis(axis)
    half = np.asarray(theta, dtype=float) / 2
    return ExtQuaternion.real(kind, Quaternion.from_parts(np.cos(half), np.sin(half)[..., None] * axis))


def make_translator(kind, axis, phi) -> ExtQuaternion:
    """cos(u phi/2) + axis sin(u phi/2).

    Complex ring: Lorentz boost with rapidity phi. Dual: Galilean shear by phi.
    Split: simple rotation by phi in the plane of 1 and u*axis.
    """
    kind = UnitKind.parse(kind)
    axis = _unit_axis(axis)
    c, s = cos_sin_u(kind, np.asarray(phi, dtype=float) / 2)
    return ExtQuaternion(kind, Quaternion.scalar(c), Quaternion.vector(np.asarray(s)[..., None] * axis))


_BASIS = np.eye(4)


def matrix_of(q: ExtQuaternion) -> np.ndarray:
    """Real 4x4 matrix M with coords(T_q v) = M @ coords(v); batched over q."""
    require_unit(q, APPLY_UNIT_TOL)
    e = Minquat(q.kind, _BASIS).to_ext()
    qq = ExtQuaternion(q.kind, q.alpha.data[..., None, :], q.beta.data[..., None, :])
    cols = Minquat.from_ext(sandwich(qq, e), tol=None).coords
    # cols[..., k, :] is the image of basis vector k
    return np.swapaxes(cols, -1, -2)


def apply_matrix(m: np.ndarray, v: Minquat) -> Minquat:
    return Minquat(v.kind, np.einsum("...ij,...j->...i", m, v.coords))


def adapted_matrix(q_b: ExtQuaternion):
    """Matrix of T_{q_b} in an orthonormal basis {1, u q, u q2, u q3} adapted
    to the axis q of the boost-like factor q_b (bar = star).

    The first basis vectors after 1 come from Gram-Schmidt on i1, i2, i3.
    Returns ``(matrix, basis)`` with ``basis`` a list of four Minquats. For
    q_b = +-1 the axis is undefined and the standard basis is used.
    """
    if q_b.shape != ():
        raise DomainError("adapted_matrix works on a single element")
    require_unit(q_b, APPLY_UNIT_TOL)
    v = Minquat.from_ext(q_b)
    axis = v.coords[1:]
    seeds = list(np.eye(3))
    if np.linalg.norm(axis) <= 1e-12:
        frame = seeds
    else:
        frame = [axis / np.linalg.norm(axis)]
        for seed in seeds:
            r = seed - sum(np.dot(seed, f) * f for f in frame)
            n = np.linalg.norm(r)
            if n > PARALLEL_TOL and len(frame) < 3:
                frame.append(r / n)
    basis = [Minquat(q_b.kind, [1.0, 0.0, 0.0, 0.0])]
    basis += [Minquat.from_parts(q_b.kind, 0.0, f) for f in frame]
    frame_m = np.eye(4)
    frame_m[1:, 1:] = np.array(frame).T
    # real coordinates in the adapted basis: P^T M P with P orthogonal
    m = frame_m.T @ matrix_of(q_b) @ frame_m
    return m, basis

