"""The unit level set M = {v : Q(v) = 1} of the minquats and its distance.

Canonical components: the upper sheet v0 >= 1 of the hyperboloid (H^3,
complex ring), the affine plane v0 = 1 (E^3, dual ring) and the whole unit
sphere (S^3, split ring). Points are written v = cos(u rho) + r sin(u rho)
with r a real unit 3-vector, which in real coordinates is
(C(rho), S(rho) r) with (C, S) = (cosh, sinh), (1, id) or (cos, sin).
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .action import APPLY_UNIT_TOL, Minquat, apply, make_translator
from .extquat import ExtQuaternion, ext_mul, inv_bar, require_unit
from .quat import Quaternion
from .rings import (
    COMPLEX,
    DUAL,
    SPLIT,
    DomainError,
    UnitKind,
    cos_sin_u,
    ring_angle_from_cos_sin,
)

POINT_TOL = 1e-10


class SpaceFormPoint(Minquat):
    """A minquat on the canonical component of M; validated on construction."""

    def __post_init__(self):
        super().__post_init__()
        v = self.coords
        size = v[..., 0] ** 2 + np.sum(v[..., 1:] ** 2, axis=-1)
        err = np.abs(self.qform() - 1.0) / np.maximum(1.0, size)
        if np.any(err > POINT_TOL):
            raise DomainError(f"Q(v) != 1 (error {np.max(err):.3g})", self)
        if self.kind == COMPLEX and np.any(v[..., 0] < 0):
            raise DomainError("point lies on the lower sheet of the hyperboloid", self)
        if self.kind == DUAL and np.any(np.abs(v[..., 0] - 1.0) > POINT_TOL):
            raise DomainError("dual point must lie on the plane v0 = 1", self)

    @classmethod
    def from_minquat(cls, v: Minquat) -> "SpaceFormPoint":
        return cls(v.kind, v.coords)

    def __getitem__(self, index):
        if not isinstance(index, tuple):
            index = (index,)
        return SpaceFormPoint(self.kind, self.coords[index + (Ellipsis, slice(None))])

    def __repr__(self):
        return f"SpaceFormPoint({self.kind.label}, {self.coords.tolist()!r})"


def basepoint(kind) -> SpaceFormPoint:
    return SpaceFormPoint(kind, [1.0, 0.0, 0.0, 0.0])


def lift(kind, rho, axis=None) -> SpaceFormPoint:
    """The point cos(u rho) + axis sin(u rho).

    With ``axis=None`` the second argument is a 3-vector (or pure
    Quaternion) read as rho * axis, so ``lift(DUAL, [0, 3, 0])`` is
    1 + eps*3 i2. For the split ring rho must lie in [0, pi].
    """
    kind = UnitKind.parse(kind)
    if axis is None:
        vec = rho.vec if isinstance(rho, Quaternion) else np.asarray(rho, dtype=float)
        rho = np.linalg.norm(vec, axis=-1)
        safe = np.where(rho > 0, rho, 1.0)[..., None]
        axis = np.where(rho[..., None] > 0, vec / safe, 0.0)
    else:
        if isinstance(axis, Quaternion):
            axis = axis.vec
        axis = np.asarray(axis, dtype=float)
        rho = np.asarray(rho, dtype=float)
        n = np.linalg.norm(axis, axis=-1)
        if np.any((n == 0) & (rho != 0)):
            raise DomainError("zero axis with non-zero rho", axis)
        axis = axis / np.where(n > 0, n, 1.0)[..., None]
    if kind == SPLIT and np.any((rho < 0) | (rho > np.pi)):
        raise DomainError("split-ring rho must lie in [0, pi]", rho)
    c, s = cos_sin_u(kind, rho)
    return SpaceFormPoint(kind, Quaternion.from_parts(c, np.asarray(s)[..., None] * axis).data)


def polar_coords(v: Minquat):
    """Inverse of ``lift``: (rho, axis) with axis = i1 when rho = 0."""
    vec = v.coords[..., 1:]
    n = np.linalg.norm(vec, axis=-1)
    if v.kind == COMPLEX:
        rho = np.arcsinh(n)
    elif v.kind == DUAL:
        rho = n
    else:
        rho = np.arctan2(n, v.coords[..., 0])
    axis = np.where(n[..., None] > 0, vec / np.where(n > 0, n, 1.0)[..., None], [1.0, 0.0, 0.0])
    return rho, axis


def _check_kinds(v: Minquat, w: Minquat):
    if v.kind != w.kind:
        raise DomainError(f"algebra mismatch: {v.kind.label} vs {w.kind.label}")


def relative(v: Minquat, w: Minquat) -> ExtQuaternion:
    """v * bar(w) = cos(u gamma) + r3 sin(u gamma), with Q = 1."""
    _check_kinds(v, w)
    return ext_mul(v.to_ext(), inv_bar(w.to_ext()))


def sine_norm(rel: ExtQuaternion):
    """|sin(u gamma) / u| read off the vector part of a unit element.

    For the vector part a + u*b (a, b real 3-vectors) this is
    sqrt(|b|^2 - |a|^2) (complex), |b| (dual), sqrt(|a|^2 + |b|^2) (split).
    """
    a2 = np.sum(rel.alpha.vec ** 2, axis=-1)
    b2 = np.sum(rel.beta.vec ** 2, axis=-1)
    if rel.kind == COMPLEX:
        return np.sqrt(np.maximum(b2 - a2, 0.0))
    if rel.kind == DUAL:
        return np.sqrt(b2)
    return np.sqrt(a2 + b2)


def distance(v: Minquat, w: Minquat):
    """Intrinsic distance: hyperbolic, Euclidean or spherical by ring."""
    rel = relative(v, w)
    return ring_angle_from_cos_sin(rel.scalar_part(), sine_norm(rel))


def closed_form_distance(kind, rho1, axis1, rho2, axis2):
    """Distance from polar coordinates about the basepoint.

    complex: arccosh(cosh r1 cosh r2 - <a1, a2> sinh r1 sinh r2)
    dual:    |a1 r1 - a2 r2|
    split:   arccos(cos r1 cos r2 + <a1, a2> sin r1 sin r2)
    """
    kind = UnitKind.parse(kind)
    axis1 = np.asarray(axis1, dtype=float)
    axis2 = np.asarray(axis2, dtype=float)
    if kind == DUAL:
        diff = np.asarray(rho1)[..., None] * axis1 - np.asarray(rho2)[..., None] * axis2
        return np.linalg.norm(diff, axis=-1)
    k = np.sum(axis1 * axis2, axis=-1)
    if kind == COMPLEX:
        x = np.cosh(rho1) * np.cosh(rho2) - k * np.sinh(rho1) * np.sinh(rho2)
        return np.arccosh(np.maximum(x, 1.0))
    x = np.cos(rho1) * np.cos(rho2) + k * np.sin(rho1) * np.sin(rho2)
    return np.arccos(np.clip(x, -1.0, 1.0))


def act(q: ExtQuaternion, v: Minquat) -> SpaceFormPoint:
    """T_q restricted to M; a hyperboloid image on v0 < 0 is flipped back."""
    require_unit(q, APPLY_UNIT_TOL)
    out = apply(q, v)
    coords = out.coords
    if out.kind == COMPLEX:
        coords = np.where(coords[..., :1] < 0, -coords, coords)
    return SpaceFormPoint(out.kind, coords)


def to_basepoint(v: Minquat) -> ExtQuaternion:
    """The translator along v's axis that carries v to the basepoint 1."""
    rho, axis = polar_coords(v)
    return make_translator(v.kind, axis, -rho)


class LawOfCosines(NamedTuple):
    lhs: np.ndarray
    rhs: np.ndarray
    cos_angle: np.ndarray


def law_of_cosines_check(a: Minquat, v: Minquat, b: Minquat) -> LawOfCosines:
    """Both sides of the law of cosines for the triangle (a, v, b) with apex v.

    With g1 = d(v, a), g2 = d(v, b), g3 = d(a, b) and A the angle at v, the
    complex and split rings give cos(u g3) = cos(u g1) cos(u g2) +
    sigma cos(A) S(g1) S(g2) in real form, i.e. the hyperbolic and the
    spherical law. For dual numbers the cosine identity is 1 = 1, so the
    next-order (Euclidean) law g3^2 = g1^2 + g2^2 - 2 g1 g2 cos(A) is
    returned instead.
    """
    _check_kinds(a, v)
    _check_kinds(v, b)
    kind = v.kind
    g1 = distance(v, a)
    g2 = distance(v, b)
    g3 = distance(a, b)
    to_base = to_basepoint(v)
    _, dir_a = polar_coords(apply(to_base, a))
    _, dir_b = polar_coords(apply(to_base, b))
    cos_angle = np.sum(dir_a * dir_b, axis=-1)
    if kind == DUAL:
        return LawOfCosines(g3 ** 2, g1 ** 2 + g2 ** 2 - 2 * g1 * g2 * cos_angle, cos_angle)
    c1, s1 = cos_sin_u(kind, g1)
    c2, s2 = cos_sin_u(kind, g2)
    c3, _ = cos_sin_u(kind, g3)
    return LawOfCosines(c3, c1 * c2 + kind.sigma * cos_angle * s1 * s2, cos_angle)

