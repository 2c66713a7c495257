import math

import numpy as np
import pytest

from conftest import close, ext_close
from quatspace import sampling
from quatspace.action import Minquat, apply, compose, make_rotor, make_translator
from quatspace.extquat import ExtQuaternion, inv_bar, qform
from quatspace.quat import I1, I2, Quaternion
from quatspace.rings import COMPLEX, DUAL, SPLIT, DomainError, cos_sin_u
from quatspace.spaceform import (
    SpaceFormPoint,
    act,
    basepoint,
    closed_form_distance,
    distance,
    law_of_cosines_check,
    lift,
    polar_coords,
    relative,
    sine_norm,
    to_basepoint,
)

N = 1000


def isometries(rng, kind, n):
    if kind != COMPLEX:
        return sampling.unit_elements(rng, kind, n)
    # orthochronous: rotor times boost
    r = make_rotor(kind, sampling.unit_vectors(rng, n, 3), rng.uniform(0, 2 * np.pi, n))
    b = make_translator(kind, sampling.unit_vectors(rng, n, 3), rng.uniform(-1.5, 1.5, n))
    return compose(r, b)


# -- points ---------------------------------------------------------------


def test_basepoint_is_lift_of_zero(kind):
    assert close(lift(kind, 0.0, I1).coords, basepoint(kind).coords)
    assert close(lift(kind, [0.0, 0.0, 0.0]).coords, [1, 0, 0, 0])


def test_lift_examples():
    v = lift(COMPLEX, 1.0, I1)
    assert close(v.coords, [math.cosh(1), math.sinh(1), 0, 0])
    assert np.isclose(v.qform(), 1.0, atol=1e-12)
    w = lift(DUAL, Quaternion.vector([0.0, 3.0, 0.0]))
    assert close(w.coords, [1, 0, 3, 0]) and w.qform() == 1.0


def test_lift_rejects():
    with pytest.raises(DomainError):
        lift(SPLIT, 1.0, [0.0, 0.0, 0.0])
    with pytest.raises(DomainError):
        lift(SPLIT, 4.0, I1)


def test_point_validation():
    with pytest.raises(DomainError):
        SpaceFormPoint(COMPLEX, [-math.cosh(1), math.sinh(1), 0, 0])
    with pytest.raises(DomainError):
        SpaceFormPoint(DUAL, [-1.0, 2.0, 0, 0])
    with pytest.raises(DomainError):
        SpaceFormPoint(SPLIT, [1.0, 1.0, 0, 0])


def test_polar_coords_inverts_lift(rng, kind):
    v = sampling.points(rng, kind, 200)
    rho, axis = polar_coords(v)
    assert np.allclose(lift(kind, rho, axis).coords, v.coords, atol=1e-12)


# -- relative and distance ------------------------------------------------


def test_relative_identities(rng, kind):
    v = sampling.points(rng, kind, 50)
    w = sampling.points(rng, kind, 50)
    assert ext_close(relative(v, v), ExtQuaternion.one(kind, (50,)), 1e-12)
    assert ext_close(relative(w, v), inv_bar(relative(v, w)), 1e-12)
    z = qform(relative(v, w))
    assert np.allclose(z.a, 1.0, atol=1e-10) and np.allclose(z.b, 0.0, atol=1e-10)


def test_split_collinear_relative():
    r = relative(lift(SPLIT, 1.1, I1), lift(SPLIT, 0.4, I1))
    expected = ExtQuaternion(SPLIT, [math.cos(0.7), 0, 0, 0], [0, math.sin(0.7), 0, 0])
    assert ext_close(r, expected)


def test_relative_is_cos_sin_of_distance(rng, kind):
    # the scalar part of v w-bar is cos(u d) and the vector part has size sin(u d)
    v = sampling.points(rng, kind, N)
    w = sampling.points(rng, kind, N)
    d = distance(v, w)
    c, s = cos_sin_u(kind, d)
    rel = relative(v, w)
    assert np.allclose(rel.scalar_part().a, c, rtol=1e-10, atol=1e-10)
    assert np.allclose(rel.scalar_part().b, 0.0, atol=1e-12)
    assert np.allclose(sine_norm(rel), np.abs(s), rtol=1e-9, atol=1e-9)


def test_distance_examples():
    assert distance(basepoint(SPLIT), basepoint(SPLIT)) == 0.0
    assert abs(distance(basepoint(COMPLEX), lift(COMPLEX, 1.0, I1)) - 1.0) < 1e-12
    d = distance(lift(DUAL, [3.0, 0, 0]), lift(DUAL, [0, 4.0, 0]))
    assert abs(d - 5.0) <= 1e-12
    assert abs(distance(lift(SPLIT, math.pi / 2, I1), lift(SPLIT, math.pi / 2, I2)) - math.pi / 2) < 1e-12


def test_dual_coincident_points():
    v = lift(DUAL, [1.0, 2.0, 3.0])
    assert distance(v, v) == 0.0


def test_split_antipodes():
    assert abs(distance(basepoint(SPLIT), SpaceFormPoint(SPLIT, [-1.0, 0, 0, 0])) - math.pi) < 1e-12


def test_kind_mismatch():
    with pytest.raises(DomainError):
        distance(basepoint(SPLIT), basepoint(DUAL))


def test_opposite_sheets_rejected():
    v = Minquat(COMPLEX, [1.0, 0, 0, 0])
    w = Minquat(COMPLEX, [-1.0, 0, 0, 0])
    with pytest.raises(DomainError):
        distance(v, w)


def test_metric_axioms(rng, kind):
    u, v, w = (sampling.points(rng, kind, N) for _ in range(3))
    duv, dvw, duw = distance(u, v), distance(v, w), distance(u, w)
    assert np.all(duv >= 0)
    assert np.all(np.abs(duv - distance(v, u)) <= 1e-12 * np.maximum(1, duv))
    assert np.min(duv + dvw - duw) >= -1e-9
    assert np.all(distance(u, u) <= 1e-8)
    assert np.all(duv[np.any(np.abs(u.coords - v.coords) > 1e-6, axis=-1)] > 0)


def test_closed_forms_agree(rng, kind):
    v = sampling.points(rng, kind, N)
    w = sampling.points(rng, kind, N)
    r1, a1 = polar_coords(v)
    r2, a2 = polar_coords(w)
    generic = distance(v, w)
    closed = closed_form_distance(kind, r1, a1, r2, a2)
    assert np.max(np.abs(generic - closed)) <= 1e-10 * max(1.0, np.max(closed))


@pytest.mark.parametrize("a, b", [([3, 0, 0], [0, 4, 0]), ([0, 0, 0], [3, 4, 0]), ([1, 1, 1], [1, 4, 5])])
def test_dual_pythagorean(a, b):
    assert abs(distance(lift(DUAL, a), lift(DUAL, b)) - 5.0) <= 1e-12


# -- action on points -----------------------------------------------------


def test_act_identity(rng, kind):
    v = sampling.points(rng, kind, 10)
    assert close(act(ExtQuaternion.one(kind), v).coords, v.coords)


def test_dual_translation():
    v = lift(DUAL, [0.5, -1.0, 2.0])
    out = act(make_translator(DUAL, I1, 1.5), v)
    assert close(out.coords, [1.0, 2.0, -1.0, 2.0])


def test_boost_moves_basepoint():
    out = act(make_translator(COMPLEX, I1, 0.9), basepoint(COMPLEX))
    assert close(out.coords, [math.cosh(0.9), math.sinh(0.9), 0, 0])
    assert abs(distance(out, basepoint(COMPLEX)) - 0.9) < 1e-12


def test_unit_biquaternions_keep_upper_sheet(rng):
    q = sampling.unit_elements(rng, COMPLEX, N)
    raw = apply(q, sampling.points(rng, COMPLEX, N))
    assert np.all(raw.v0 >= 1.0 - 1e-12)
    assert np.all(act(q, raw).v0 >= 1.0)


def test_isometry(rng, kind):
    q = isometries(rng, kind, N)
    v = sampling.points(rng, kind, N)
    w = sampling.points(rng, kind, N)
    assert np.max(np.abs(distance(act(q, v), act(q, w)) - distance(v, w))) <= 1e-9


def test_conjugated_axis(rng):
    kind = SPLIT
    q = make_rotor(kind, sampling.unit_vectors(rng, 1, 3)[0], 1.3)
    v, w = lift(kind, 0.3, I1), lift(kind, 1.0, I2)
    before, after = relative(v, w), relative(act(q, v), act(q, w))
    assert ext_close(after, q * before * inv_bar(q), 1e-12)


def test_dual_stays_on_upper_plane(rng):
    q = sampling.unit_elements(rng, DUAL, N)
    out = apply(q, sampling.points(rng, DUAL, N))
    assert np.max(np.abs(out.v0 - 1.0)) <= 1e-12


def test_to_basepoint(rng, kind):
    v = sampling.points(rng, kind, 100)
    assert np.allclose(act(to_basepoint(v), v).coords, [1, 0, 0, 0], atol=1e-10)


# -- law of cosines -------------------------------------------------------


def test_right_spherical_triangle():
    a, b = lift(SPLIT, math.pi / 2, I1), lift(SPLIT, math.pi / 2, I2)
    res = law_of_cosines_check(a, basepoint(SPLIT), b)
    assert abs(res.lhs) < 1e-15 and abs(res.rhs) < 1e-15 and abs(res.cos_angle) < 1e-15


def test_hyperbolic_collinear():
    a, b = lift(COMPLEX, 0.4, I1), lift(COMPLEX, 0.7, -I1.vec)
    res = law_of_cosines_check(a, basepoint(COMPLEX), b)
    assert np.isclose(res.cos_angle, -1.0)
    assert np.isclose(res.lhs, math.cosh(1.1)) and np.isclose(res.rhs, math.cosh(1.1))
    assert abs(distance(a, b) - 1.1) < 1e-12


def test_degenerate_triangle(kind):
    v, w = basepoint(kind), lift(kind, 0.8, I2)
    res = law_of_cosines_check(v, v, w)
    assert np.isclose(res.lhs, res.rhs)


def test_law_of_cosines_random(rng, kind):
    a, v, b = (sampling.points(rng, kind, N) for _ in range(3))
    res = law_of_cosines_check(a, v, b)
    assert np.max(np.abs(res.lhs - res.rhs) / np.maximum(1.0, np.abs(res.lhs))) <= 1e-9
