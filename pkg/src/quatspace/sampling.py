"""Seeded random elements for property checks and benchmarks."""

from __future__ import annotations

import numpy as np

from .action import Minquat
from .extquat import ExtQuaternion
from .quat import Quaternion
from .rings import COMPLEX, DUAL, Scalar, UnitKind, cos_sin_u
from .spaceform import SpaceFormPoint, lift

# parameter ranges keep cosh/sinh factors moderate so fixed tolerances apply
THETA_MAX = {COMPLEX: 1.0, DUAL: 2.0}
RHO_MAX = {COMPLEX: 1.5, DUAL: 3.0}


def unit_vectors(rng: np.random.Generator, n: int, dim: int) -> np.ndarray:
    v = rng.standard_normal((n, dim))
    return v / np.linalg.norm(v, axis=-1, keepdims=True)


def scalars(rng, kind, n, scale=3.0) -> Scalar:
    return Scalar(kind, rng.uniform(-scale, scale, n), rng.uniform(-scale, scale, n))


def quaternions(rng, n, scale=1.0) -> Quaternion:
    return Quaternion(rng.uniform(-scale, scale, (n, 4)))


def ext_quaternions(rng, kind, n, scale=1.0) -> ExtQuaternion:
    return ExtQuaternion(kind, rng.uniform(-scale, scale, (n, 4)), rng.uniform(-scale, scale, (n, 4)))


def unit_elements(rng, kind, n) -> ExtQuaternion:
    """Q(q) = 1: q = cos(u theta) a + sin(u theta) b with a, b orthonormal in R^4."""
    kind = UnitKind.parse(kind)
    a = unit_vectors(rng, n, 4)
    b = unit_vectors(rng, n, 4)
    b = b - np.sum(a * b, axis=-1, keepdims=True) * a
    b /= np.linalg.norm(b, axis=-1, keepdims=True)
    theta = rng.uniform(0.0, THETA_MAX.get(kind, np.pi / 2), n)
    c, s = cos_sin_u(kind, theta)
    return ExtQuaternion(kind, c[:, None] * a, s[:, None] * b)


def minquats(rng, kind, n, scale=2.0) -> Minquat:
    return Minquat(kind, rng.uniform(-scale, scale, (n, 4)))


def points(rng, kind, n) -> SpaceFormPoint:
    """Points of the canonical component, spread over a ball about 1."""
    kind = UnitKind.parse(kind)
    axis = unit_vectors(rng, n, 3)
    rho = rng.uniform(0.0, RHO_MAX.get(kind, np.pi), n)
    return lift(kind, rho, axis)
