import math

import numpy as np
import pytest

from conftest import close, ext_close
from quatspace import sampling
from quatspace.action import (
    Minquat,
    adapted_matrix,
    apply,
    apply_matrix,
    compose,
    inverse,
    make_rotor,
    make_translator,
    matrix_of,
    metric,
    sandwich,
)
from quatspace.extquat import ExtQuaternion, bilinear, decompose, ext_mul, inv_bar, inv_star, qform
from quatspace.quat import I1, I2, I3, ONE
from quatspace.rings import COMPLEX, DUAL, KINDS, SPLIT, DomainError

N = 1000
E0 = [1.0, 0.0, 0.0, 0.0]


@pytest.fixture
def triples(rng, kind):
    p = sampling.unit_elements(rng, kind, N)
    q = sampling.unit_elements(rng, kind, N)
    v = sampling.minquats(rng, kind, N)
    return p, q, v


def rel_err(x, y):
    return np.max(np.abs(x - y) / np.maximum(1.0, np.abs(y)))


# -- minquats -------------------------------------------------------------


def test_minquat_round_trip(kind):
    v = Minquat.from_parts(kind, 2.0, [1.0, -3.0, 0.5])
    e = v.to_ext()
    assert ext_close(inv_star(e), inv_bar(e))
    assert close(Minquat.from_ext(e).coords, v.coords)
    assert np.isclose(v.qform(), 4.0 + kind.sigma * 10.25)
    assert np.isclose(qform(e).a, v.qform()) and qform(e).b == 0.0


def test_non_minquat_rejected(kind):
    with pytest.raises(DomainError):
        Minquat.from_ext(ExtQuaternion.real(kind, I1))


def test_metric_signatures():
    assert np.array_equal(np.diag(metric(COMPLEX)), [1, -1, -1, -1])
    assert np.array_equal(np.diag(metric(DUAL)), [1, 0, 0, 0])
    assert np.array_equal(np.diag(metric(SPLIT)), [1, 1, 1, 1])


# -- apply ----------------------------------------------------------------


def test_identity_action(kind):
    v = Minquat.from_parts(kind, 0.3, [1.0, 2.0, -1.0])
    assert close(apply(ExtQuaternion.one(kind), v).coords, v.coords)


def test_boost_ln2():
    q = make_translator(COMPLEX, I1, math.log(2))
    out = apply(q, Minquat(COMPLEX, E0))
    assert np.allclose(out.coords, [1.25, 0.75, 0.0, 0.0], atol=1e-12, rtol=0)


def test_dual_shear():
    q = ExtQuaternion(DUAL, ONE, I1)  # phi/2 = 1
    assert close(apply(q, Minquat(DUAL, E0)).coords, [1.0, 2.0, 0.0, 0.0])


def test_split_simple_rotation():
    q = make_translator(SPLIT, I1, math.pi / 2)
    assert np.allclose(apply(q, Minquat(SPLIT, E0)).coords, [0.0, 1.0, 0.0, 0.0], atol=1e-15)


def test_apply_checks_inputs():
    v = Minquat(SPLIT, E0)
    with pytest.raises(DomainError):
        apply(ExtQuaternion.real(SPLIT, ONE * 1.1), v)
    with pytest.raises(DomainError):
        apply(ExtQuaternion.one(DUAL), v)


def test_closure(triples):
    _, q, v = triples
    raw = sandwich(q, v.to_ext())
    assert rel_err(inv_star(raw).alpha.data, inv_bar(raw).alpha.data) <= 1e-10
    assert rel_err(inv_star(raw).beta.data, inv_bar(raw).beta.data) <= 1e-10


def test_morphism(triples):
    p, q, v = triples
    assert rel_err(apply(ext_mul(p, q), v).coords, apply(p, apply(q, v)).coords) <= 1e-10


def test_form_preservation(rng, triples):
    _, q, v = triples
    w = sampling.minquats(rng, q.kind, N)
    qv, qw = apply(q, v), apply(q, w)
    before, after = bilinear(v.to_ext(), w.to_ext()), bilinear(qv.to_ext(), qw.to_ext())
    assert rel_err(after.a, before.a) <= 1e-10 and np.max(np.abs(after.b)) <= 1e-10
    assert rel_err(qv.qform(), v.qform()) <= 1e-10


def test_double_cover_kernel(triples):
    _, q, v = triples
    assert np.array_equal(apply(-q, v).coords, apply(q, v).coords)
    assert np.array_equal(matrix_of(-q), matrix_of(q))


def test_compose_and_inverse(rng, kind):
    q = sampling.unit_elements(rng, kind, 20)
    assert ext_close(compose(q, inverse(q)), ExtQuaternion.one(kind, (20,)), 1e-12)


def test_rotor_angle_addition(kind):
    r = compose(make_rotor(kind, I1, 0.3), make_rotor(kind, I1, 0.9))
    assert ext_close(r, make_rotor(kind, I1, 1.2), 1e-15)
    assert ext_close(make_rotor(kind, I1, 0.0), ExtQuaternion.one(kind))


def test_zero_axis_rejected(kind):
    with pytest.raises(DomainError):
        make_rotor(kind, [0.0, 0.0, 0.0], 1.0)
    with pytest.raises(DomainError):
        make_translator(kind, [0.0, 0.0, 0.0], 1.0)


def test_translator_is_unit():
    q = make_translator(COMPLEX, I1, 1.0)
    assert np.isclose(qform(q).a, math.cosh(0.5) ** 2 - math.sinh(0.5) ** 2)


def test_boosts_do_not_close():
    q = compose(make_translator(COMPLEX, I1, 0.5), make_translator(COMPLEX, I2, 0.5))
    assert np.linalg.norm(decompose(q).q_r.alpha.vec) > 1e-3


@pytest.mark.parametrize("a, b", [(0.5, 0.5), (0.2, 1.3), (1.0, 2.0)])
def test_thomas_angle_perpendicular_boosts(a, b):
    # textbook oracle for perpendicular boosts: tan(eps/2) = tanh(a/2) tanh(b/2)
    q = compose(make_translator(COMPLEX, I1, a), make_translator(COMPLEX, I2, b))
    half = math.atan(math.tanh(a / 2) * math.tanh(b / 2))
    assert np.isclose(np.linalg.norm(decompose(q).q_r.alpha.vec), math.sin(half), rtol=1e-12)


# -- matrices -------------------------------------------------------------


def test_matrix_of_identity(kind):
    assert np.array_equal(matrix_of(ExtQuaternion.one(kind)), np.eye(4))


def test_boost_matrix():
    m = matrix_of(make_translator(COMPLEX, I1, 1.0))
    expected = np.eye(4)
    expected[:2, :2] = [[math.cosh(1), math.sinh(1)], [math.sinh(1), math.cosh(1)]]
    assert np.allclose(m, expected, atol=1e-12, rtol=0)
    assert abs(m[0, 0] - 1.5430806348) < 1e-10 and abs(m[1, 0] - 1.1752011936) < 1e-10


def test_split_rotor_matrix():
    t = 0.7
    m = matrix_of(make_rotor(SPLIT, I3, t))
    expected = np.eye(4)
    expected[1:3, 1:3] = [[math.cos(t), -math.sin(t)], [math.sin(t), math.cos(t)]]
    assert np.allclose(m, expected, atol=1e-15)


def test_matrix_matches_action(triples):
    _, q, v = triples
    assert rel_err(apply_matrix(matrix_of(q), v).coords, apply(q, v).coords) <= 1e-12


def test_matrix_preserves_metric(rng, kind):
    q = sampling.unit_elements(rng, kind, N)
    m = matrix_of(q)
    g = metric(kind)
    mtgm = np.swapaxes(m, -1, -2) @ g @ m
    assert np.max(np.abs(mtgm - g)) <= 1e-10 * np.max(np.abs(m)) ** 2


def test_split_matrices_are_so4(rng):
    m = matrix_of(sampling.unit_elements(rng, SPLIT, N))
    assert np.max(np.abs(np.swapaxes(m, -1, -2) @ m - np.eye(4))) <= 1e-10
    assert np.max(np.abs(np.linalg.det(m) - 1.0)) <= 1e-10


def test_complex_generators_are_orthochronous(rng):
    r = make_rotor(COMPLEX, sampling.unit_vectors(rng, N, 3), rng.uniform(0, 2 * np.pi, N))
    b = make_translator(COMPLEX, sampling.unit_vectors(rng, N, 3), rng.uniform(-2, 2, N))
    m = matrix_of(compose(r, b))
    assert np.all(m[:, 0, 0] >= 1.0 - 1e-12)
    assert np.allclose(np.linalg.det(m), 1.0, atol=1e-9)


def test_adapted_matrix_identity(kind):
    m, basis = adapted_matrix(ExtQuaternion.one(kind))
    assert np.allclose(m, np.eye(4)) and len(basis) == 4


def test_adapted_matrix_dual_shear():
    m, basis = adapted_matrix(ExtQuaternion(DUAL, ONE, I2))
    assert close(basis[1].coords, [0, 0, 1, 0])
    assert np.allclose(m[:2, :2], [[1, 0], [2, 1]], atol=1e-15)
    assert np.allclose(m[2:, 2:], np.eye(2), atol=1e-15)


def test_adapted_matrix_complex_boost():
    axis = np.array([1.0, 2.0, 2.0]) / 3
    q_b = make_translator(COMPLEX, axis, 0.6)  # theta = 0.3
    m, basis = adapted_matrix(q_b)
    ch, sh = math.cosh(0.6), math.sinh(0.6)
    assert np.allclose(m[:2, :2], [[ch, sh], [sh, ch]], atol=1e-12)
    assert np.allclose(m[2:, 2:], np.eye(2), atol=1e-12)
    assert np.allclose(m[:2, 2:], 0, atol=1e-12)
    frame = np.array([b.coords[1:] for b in basis[1:]])
    assert np.allclose(frame @ frame.T, np.eye(3), atol=1e-12)


def test_adapted_matrix_single_element_only(rng):
    with pytest.raises(DomainError):
        adapted_matrix(sampling.unit_elements(rng, SPLIT, 2))


@pytest.mark.parametrize("kind", KINDS, ids=lambda k: k.label)
def test_batched_vs_single(rng, kind):
    q = sampling.unit_elements(rng, kind, 5)
    v = sampling.minquats(rng, kind, 5)
    batch = apply(q, v).coords
    single = np.array([apply(q[i], v[i]).coords for i in range(5)])
    assert np.array_equal(batch, single)
