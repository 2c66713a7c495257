"""Real quaternions, batched over leading array dimensions.

A ``Quaternion`` wraps an array of shape ``(..., 4)`` ordered ``(w, x, y, z)``
for ``w + x*i1 + y*i2 + z*i3``. Pure quaternions (``w == 0``) double as
3-vectors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_REAL = (int, float, np.floating, np.integer)


@dataclass(frozen=True, eq=False)
class Quaternion:
    data: np.ndarray

    __array_ufunc__ = None

    def __post_init__(self):
        data = np.asarray(self.data, dtype=float)
        if data.shape[-1:] != (4,):
            raise ValueError(f"quaternion data needs a trailing axis of 4, got {data.shape}")
        object.__setattr__(self, "data", data)

    @classmethod
    def from_parts(cls, w, vec) -> "Quaternion":
        w = np.asarray(w, dtype=float)
        vec = np.asarray(vec, dtype=float)
        shape = np.broadcast_shapes(w.shape, vec.shape[:-1])
        out = np.empty(shape + (4,))
        out[..., 0] = w
        out[..., 1:] = vec
        return cls(out)

    @classmethod
    def vector(cls, vec) -> "Quaternion":
        return cls.from_parts(0.0, vec)

    @classmethod
    def scalar(cls, w) -> "Quaternion":
        return cls.from_parts(w, np.zeros(3))

    @property
    def shape(self) -> tuple:
        return self.data.shape[:-1]

    @property
    def w(self):
        return self.data[..., 0]

    @property
    def x(self):
        return self.data[..., 1]

    @property
    def y(self):
        return self.data[..., 2]

    @property
    def z(self):
        return self.data[..., 3]

    @property
    def vec(self) -> np.ndarray:
        return self.data[..., 1:]

    def scalar_part(self) -> "Quaternion":
        return Quaternion.scalar(self.w)

    def vector_part(self) -> "Quaternion":
        return Quaternion.vector(self.vec)

    def __repr__(self):
        return f"Quaternion({self.data.tolist()!r})"

    def __getitem__(self, index):
        if not isinstance(index, tuple):
            index = (index,)
        return Quaternion(self.data[index + (Ellipsis, slice(None))])

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.data + other.data)

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.data - other.data)

    def __neg__(self):
        return Quaternion(-self.data)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return quat_mul(self, other)
        if isinstance(other, _REAL):
            return Quaternion(self.data * other)
        if isinstance(other, np.ndarray):
            return Quaternion(self.data * other[..., None])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, _REAL):
            return Quaternion(other * self.data)
        if isinstance(other, np.ndarray):
            return Quaternion(other[..., None] * self.data)
        return NotImplemented

    def __truediv__(self, other):
        return self * (1.0 / np.asarray(other, dtype=float))

    def conj(self) -> "Quaternion":
        return quat_conj(self)

    def norm2(self):
        return np.sum(self.data * self.data, axis=-1)

    def norm(self):
        return np.sqrt(self.norm2())


def quat_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product, i1*i2 = i3 and cyclic."""
    p0, p1, p2, p3 = np.moveaxis(p.data, -1, 0)
    q0, q1, q2, q3 = np.moveaxis(q.data, -1, 0)
    return Quaternion(
        np.stack(
            [
                p0 * q0 - p1 * q1 - p2 * q2 - p3 * q3,
                p0 * q1 + p1 * q0 + p2 * q3 - p3 * q2,
                p0 * q2 - p1 * q3 + p2 * q0 + p3 * q1,
                p0 * q3 + p1 * q2 - p2 * q1 + p3 * q0,
            ],
            axis=-1,
        )
    )


def quat_dot(p: Quaternion, q: Quaternion):
    """Dot product of the vector parts; scalar parts are ignored."""
    return np.sum(p.vec * q.vec, axis=-1)


def quat_inner(p: Quaternion, q: Quaternion):
    """Euclidean inner product of all four components, Sc(p conj(q))."""
    return np.sum(p.data * q.data, axis=-1)


def quat_cross(p: Quaternion, q: Quaternion) -> Quaternion:
    return Quaternion.vector(np.cross(p.vec, q.vec))


def quat_conj(q: Quaternion) -> Quaternion:
    out = q.data.copy()
    out[..., 1:] *= -1
    return Quaternion(out)


ONE = Quaternion([1.0, 0.0, 0.0, 0.0])
I1 = Quaternion([0.0, 1.0, 0.0, 0.0])
I2 = Quaternion([0.0, 0.0, 1.0, 0.0])
I3 = Quaternion([0.0, 0.0, 0.0, 1.0])
