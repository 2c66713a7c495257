"""Randomised identity checks over every algebra.

Each suite draws seeded batches, evaluates a set of named invariants and
returns the worst observed error next to the tolerance it must stay under.
Errors are scaled as |x - y| / max(1, |y|), i.e. absolute for values of
order one and relative beyond.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import sampling
from .action import (
    Minquat,
    apply,
    apply_matrix,
    make_rotor,
    make_translator,
    matrix_of,
    metric,
    sandwich,
)
from .extquat import (
    ExtQuaternion,
    bilinear,
    decompose,
    inv_bar,
    inv_barstar,
    inv_star,
    is_null,
    null_by_components,
    qform,
    qform_components,
    scale,
    unit_error,
)
from .jsonio import dumps, ext_from_json, ext_to_json
from .quat import Quaternion, quat_conj, quat_cross, quat_dot, quat_mul
from .rings import COMPLEX, DUAL, KINDS, SPLIT, Scalar, UnitKind, ring_conj, ring_cos, ring_mul, ring_sin, ring_sqrt
from .spaceform import (
    act,
    basepoint,
    closed_form_distance,
    distance,
    law_of_cosines_check,
    lift,
    polar_coords,
    relative,
)


@dataclass
class InvariantResult:
    name: str
    max_error: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.max_error <= self.tolerance)


@dataclass
class CheckReport:
    suite: str
    samples: int
    results: list = field(default_factory=list)

    @property
    def max_error(self) -> float:
        return max((r.max_error for r in self.results), default=0.0)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "samples": self.samples,
            "max_error": self.max_error,
            "passed": self.passed,
            "invariants": {
                r.name: {"max_error": r.max_error, "tolerance": r.tolerance, "passed": r.passed}
                for r in self.results
            },
        }


def err(x, y) -> float:
    """Worst |x - y| / max(1, |y|) over a batch (arrays, Scalars, quaternions)."""
    if isinstance(x, Scalar):
        return max(err(x.a, y.a), err(x.b, y.b))
    if isinstance(x, ExtQuaternion):
        return max(err(x.alpha.data, y.alpha.data), err(x.beta.data, y.beta.data))
    if isinstance(x, Quaternion):
        return err(x.data, y.data)
    if isinstance(x, Minquat):
        return err(x.coords, y.coords)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.size == 0:
        return 0.0
    return float(np.max(np.abs(x - y) / np.maximum(1.0, np.abs(y))))


def _real(kind, q: Quaternion) -> ExtQuaternion:
    return ExtQuaternion.real(kind, q)


# -- suites ---------------------------------------------------------------
# Each returns a list of (name, error, tolerance).


def suite_rings(rng, kind, n):
    x, y, z = (sampling.scalars(rng, kind, n) for _ in range(3))
    out = [
        ("ring_mul commutative", err(ring_mul(x, y), ring_mul(y, x)), 1e-12),
        ("ring_mul associative", err(ring_mul(ring_mul(x, y), z), ring_mul(x, ring_mul(y, z))), 1e-12),
        ("ring_conj multiplicative", err(ring_conj(ring_mul(x, y)), ring_mul(ring_conj(x), ring_conj(y))), 1e-12),
        ("ring_conj involution", err(ring_conj(ring_conj(x)), x), 0.0),
    ]
    c, s = ring_cos(x), ring_sin(x)
    size = 1.0 + np.abs(c.a) ** 2 + np.abs(c.b) ** 2 + np.abs(s.a) ** 2 + np.abs(s.b) ** 2
    pyth = c * c + s * s
    out.append(("sin^2 + cos^2 = 1", float(np.max(np.maximum(np.abs(pyth.a - 1), np.abs(pyth.b)) / size)), 1e-12))
    w = sampling.scalars(rng, kind, n, scale=1.5)
    x2 = sampling.scalars(rng, kind, n, scale=1.5)
    lhs = ring_cos(x2 + w)
    rhs = ring_cos(x2) * ring_cos(w) - ring_sin(x2) * ring_sin(w)
    out.append(("cos addition formula", err(lhs, rhs), 1e-12))
    a = rng.uniform(0.1, 3.0, n)
    if kind == COMPLEX:
        b = rng.uniform(-3.0, 3.0, n)
    elif kind == DUAL:
        b = rng.uniform(-3.0, 3.0, n)
    else:
        b = a * rng.uniform(-0.9, 0.9, n)
    sq = Scalar(kind, a, b)
    r = ring_sqrt(sq)
    out.append(("sqrt squares back", err(r * r, sq), 1e-10))
    out.append(("sqrt has positive real part", float(np.max(np.maximum(-r.a, 0.0))), 0.0))
    return out


def suite_quat(rng, kind, n):
    p, q, r = (sampling.quaternions(rng, n) for _ in range(3))
    pv, qv = p.vector_part(), q.vector_part()
    pure = Quaternion.from_parts(-quat_dot(pv, qv), quat_cross(pv, qv).vec)
    return [
        ("associativity", err(quat_mul(quat_mul(p, q), r), quat_mul(p, quat_mul(q, r))), 1e-12),
        ("norm multiplicative", err(quat_mul(p, q).norm(), p.norm() * q.norm()), 1e-12),
        ("pure-vector product = -dot + cross", err(quat_mul(pv, qv), pure), 1e-12),
        ("conj antimultiplicative", err(quat_conj(quat_mul(p, q)), quat_mul(quat_conj(q), quat_conj(p))), 1e-12),
        ("q conj(q) = |q|^2", err(quat_mul(q, quat_conj(q)), Quaternion.scalar(q.norm2())), 1e-12),
    ]


def suite_involutions(rng, kind, n):
    p, q = (sampling.ext_quaternions(rng, kind, n) for _ in range(2))
    al, be = q.alpha, q.beta
    sig = kind.sigma
    tol = 1e-12
    out = []
    # star
    out += [
        ("star additive", err(inv_star(p + q), inv_star(p) + inv_star(q)), tol),
        ("star multiplicative", err(inv_star(p * q), inv_star(p) * inv_star(q)), tol),
        ("star involution", err(inv_star(inv_star(q)), q), 0.0),
        ("star (q* q)* = q q*", err(inv_star(inv_star(q) * q), q * inv_star(q)), tol),
        ("star alpha = (q + q*)/2", err(0.5 * (q + inv_star(q)), _real(kind, al)), tol),
    ]
    if sig:
        u_inv = Scalar(kind, 0.0, 1.0 / sig)  # 1/u = u/sigma
        beta_back = scale(q - inv_star(q), u_inv * 0.5)
    else:
        beta_back = _real(kind, be)
    out.append(("star beta = (q - q*)/(2u)", err(beta_back, _real(kind, be)), tol))
    ab_ba = quat_mul(al, be) - quat_mul(be, al)
    sq = quat_mul(al, al) - sig * quat_mul(be, be)
    out.append(("q* q = a^2 - u^2 b^2 + u(ab - ba)", err(inv_star(q) * q, ExtQuaternion(kind, sq, ab_ba)), tol))
    out.append(("q q* = a^2 - u^2 b^2 - u(ab - ba)", err(q * inv_star(q), ExtQuaternion(kind, sq, -ab_ba)), tol))
    # bar
    qb = inv_bar(q)
    out += [
        ("bar additive", err(inv_bar(p - q), inv_bar(p) - inv_bar(q)), tol),
        ("bar antimultiplicative", err(inv_bar(p * q), inv_bar(q) * inv_bar(p)), tol),
        ("bar involution", err(inv_bar(qb), q), 0.0),
        ("q bar(q) = bar(q) q", err(q * qb, qb * q), tol),
        ("Sc(q) = (q + bar q)/2", err(0.5 * (q + qb), ExtQuaternion.from_scalar(q.scalar_part())), tol),
        ("Vec(q) = (q - bar q)/2", err(0.5 * (q - qb), q.vector_part()), tol),
        ("Sc(bar q) = Sc(q)", err(qb.scalar_part(), q.scalar_part()), 0.0),
        ("q bar(q) = |a|^2 + u^2|b|^2 + 2u<a,b>", err(q * qb, ExtQuaternion.from_scalar(qform_components(q))), tol),
    ]
    # bar-star
    qbs = inv_barstar(q)
    out += [
        ("barstar additive", err(inv_barstar(p + q), inv_barstar(p) + inv_barstar(q)), tol),
        ("barstar antimultiplicative", err(inv_barstar(p * q), inv_barstar(q) * inv_barstar(p)), tol),
        ("barstar involution", err(inv_barstar(qbs), q), 0.0),
        ("barstar = bar(star) = star(bar)", max(err(qbs, inv_bar(inv_star(q))), err(qbs, inv_star(inv_bar(q)))), 0.0),
    ]
    s = al.norm2() - sig * be.norm2()
    v1 = quat_mul(quat_conj(al), be).vector_part()
    v2 = quat_mul(al, quat_conj(be)).vector_part()
    out.append(
        ("barstar(q) q = |a|^2 - u^2|b|^2 + 2u Vec(conj(a) b)",
         err(qbs * q, ExtQuaternion(kind, Quaternion.scalar(s), 2.0 * v1)), tol)
    )
    out.append(
        ("q barstar(q) = |a|^2 - u^2|b|^2 - 2u Vec(a conj(b))",
         err(q * qbs, ExtQuaternion(kind, Quaternion.scalar(s), -2.0 * v2)), tol)
    )
    # bilinear form
    r = sampling.ext_quaternions(rng, kind, n)
    lam = sampling.scalars(rng, kind, n, scale=1.0)
    out += [
        ("bilinear symmetric", err(bilinear(p, q), bilinear(q, p)), tol),
        ("bilinear additive", err(bilinear(p, q + r), bilinear(p, q) + bilinear(p, r)), tol),
        ("bilinear U-homogeneous",
         max(err(bilinear(scale(p, lam), q), lam * bilinear(p, q)),
             err(bilinear(p, scale(q, lam)), lam * bilinear(p, q))), tol),
        ("<q,q> = |a|^2 + u^2|b|^2 + 2u<a,b>", err(bilinear(q, q), qform_components(q)), tol),
    ]
    return out


def suite_qform(rng, kind, n):
    p, q = (sampling.ext_quaternions(rng, kind, n) for _ in range(2))
    return [
        ("Q(pq) = Q(p) Q(q)", err(qform(p * q), qform(p) * qform(q)), 1e-11),
        ("Q(q) = Q(bar q)", err(qform(q), qform(inv_bar(q))), 1e-11),
    ]


def suite_degeneracy(rng, kind, n):
    generic = sampling.ext_quaternions(rng, kind, n)
    a = sampling.unit_vectors(rng, n, 4)
    b = sampling.unit_vectors(rng, n, 4)
    b = b - np.sum(a * b, axis=-1, keepdims=True) * a
    b /= np.linalg.norm(b, axis=-1, keepdims=True)
    size = rng.uniform(0.5, 2.0, n)[:, None]
    if kind == COMPLEX:
        null = ExtQuaternion(kind, size * a, size * b)
    elif kind == DUAL:
        null = ExtQuaternion(kind, np.zeros((n, 4)), size * b)
    else:
        null = ExtQuaternion(kind, np.zeros((n, 4)), np.zeros((n, 4)))
    mismatch = 0
    for q in (generic, null):
        mismatch += int(np.sum(is_null(q, 1e-9) != null_by_components(q, 1e-9)))
    mismatch += int(np.sum(~is_null(null, 1e-9)))
    return [("Q(q) = 0 matches per-ring characterisation (mismatches)", float(mismatch), 0.0)]


def suite_decompose(rng, kind, n):
    q = sampling.unit_elements(rng, kind, n)
    d = decompose(q)
    flat = ExtQuaternion(kind, q.alpha.data, np.zeros_like(q.beta.data))
    flat = ExtQuaternion(kind, flat.alpha.data / q.alpha.norm()[:, None], flat.beta.data)
    d0 = decompose(flat)
    return [
        ("q_r q_b = q", err(d.product(), q), 1e-10),
        ("star(q_r) = q_r", err(inv_star(d.q_r), d.q_r), 0.0),
        ("bar(q_b) = star(q_b)", err(inv_bar(d.q_b), inv_star(d.q_b)), 0.0),
        ("Q(q_r) = Q(q_b) = 1", max(float(np.max(unit_error(d.q_r))), float(np.max(unit_error(d.q_b)))), 1e-10),
        ("beta = 0 gives q_b = 1", err(d0.q_b, ExtQuaternion.one(kind, (n,))), 0.0),
    ]


def suite_action(rng, kind, n):
    p, q = (sampling.unit_elements(rng, kind, n) for _ in range(2))
    v, w = (sampling.minquats(rng, kind, n) for _ in range(2))
    raw = sandwich(q, v.to_ext())
    tv, tw = apply(q, v), apply(q, w)
    m = matrix_of(q)
    out = [
        ("closure: star(T v) = bar(T v)", err(inv_star(raw), inv_bar(raw)), 1e-10),
        ("morphism T_pq = T_p T_q", err(apply(p * q, v), apply(p, apply(q, v))), 1e-10),
        ("bilinear form preserved", err(bilinear(tv.to_ext(), tw.to_ext()), bilinear(v.to_ext(), w.to_ext())), 1e-10),
        ("Q preserved", err(tv.qform(), v.qform()), 1e-10),
        ("matrix action = sandwich action", err(apply_matrix(m, v), tv), 1e-12),
        ("kernel: T_{-q} = T_q exactly", err(apply(-q, v), tv), 0.0),
    ]
    g = metric(kind)
    mtgm = np.einsum("...ji,jk,...kl->...il", m, g, m)
    out.append(("M^T G M = G", err(mtgm, np.broadcast_to(g, mtgm.shape)), 1e-10))
    if kind == SPLIT:
        mtm = np.einsum("...ji,...jk->...ik", m, m)
        out.append(("SO(4): M^T M = I", err(mtm, np.broadcast_to(np.eye(4), mtm.shape)), 1e-10))
        out.append(("SO(4): det M = +1", err(np.linalg.det(m), 1.0), 1e-10))
        out.append(("double cover: matrix(-q) = matrix(q) bitwise", float(np.any(matrix_of(-q) != m)), 0.0))
    if kind == COMPLEX:
        d = decompose(q)
        rotor_boost = matrix_of(d.q_r * d.q_b)
        out.append(("orthochronous: M[0,0] >= 1", float(np.max(np.maximum(1.0 - rotor_boost[:, 0, 0], 0.0))), 1e-12))
    return out


def suite_spaceform(rng, kind, n):
    u, v, w = (sampling.points(rng, kind, n) for _ in range(3))
    q = sampling.unit_elements(rng, kind, n)
    d_vw, d_wv = distance(v, w), distance(w, v)
    d_uv, d_uw = distance(u, v), distance(u, w)
    d_vv = distance(v, v)
    apart = np.linalg.norm(v.coords - w.coords, axis=-1) > 1e-8
    out = [
        ("nonnegativity", float(np.max(np.maximum(-np.concatenate([d_vw, d_uv, d_uw]), 0.0))), 0.0),
        ("d(v, v) = 0", float(np.max(d_vv)), 1e-8),
        ("d(v, w) > 0 for v != w (violations)", float(np.sum(d_vw[apart] <= 0.0)), 0.0),
        ("symmetry", err(d_vw, d_wv), 1e-12),
        ("triangle inequality slack", float(np.max(np.maximum(d_uw - d_uv - d_vw, 0.0))), 1e-9),
    ]
    tv, tw = act(q, v), act(q, w)
    out.append(("isometry d(Tv, Tw) = d(v, w)", float(np.max(np.abs(distance(tv, tw) - d_vw))), 1e-9))
    rel, trel = relative(v, w), relative(tv, tw)
    conj_axis = q * rel.vector_part() * inv_bar(q)
    out.append(("relative axis conjugated by q",
                max(err(trel.vector_part(), conj_axis), err(trel.scalar_part(), rel.scalar_part())), 1e-9))
    r1, a1 = polar_coords(v)
    r2, a2 = polar_coords(w)
    out.append(("generic distance = closed form",
                float(np.max(np.abs(d_vw - closed_form_distance(kind, r1, a1, r2, a2)))), 1e-10))
    law = law_of_cosines_check(u, v, w)
    out.append(("law of cosines", err(law.lhs, law.rhs), 1e-9))
    if kind == DUAL:
        out.append(("dual images stay on v0 = 1", float(np.max(np.abs(tv.coords[:, 0] - 1.0))), 1e-12))
    return out


def suite_golden(rng, kind, n):
    """Closed-form reference values; ``n`` is unused."""
    out = []
    if kind == COMPLEX:
        b = make_translator(kind, [1, 0, 0], np.log(2.0))
        out.append(("boost ln 2 maps 1 to (1.25; 0.75, 0, 0)",
                    err(apply(b, Minquat(kind, [1, 0, 0, 0])).coords, [1.25, 0.75, 0, 0]), 1e-12))
        m = matrix_of(make_translator(kind, [1, 0, 0], 1.0))
        ref = np.eye(4)
        ref[:2, :2] = [[np.cosh(1.0), np.sinh(1.0)], [np.sinh(1.0), np.cosh(1.0)]]
        out.append(("boost matrix at rapidity 1", err(m, ref), 1e-12))
        thomas = decompose(make_translator(kind, [1, 0, 0], 0.5) * make_translator(kind, [0, 1, 0], 0.5))
        vec_norm = float(np.linalg.norm(thomas.q_r.alpha.vec))
        out.append(("Thomas rotation |Vec(q_r)| > 1e-3 (shortfall)", max(0.0, 1e-3 - vec_norm), 0.0))
    if kind == DUAL:
        d = distance(lift(kind, [3, 0, 0]), lift(kind, [0, 4, 0]))
        out.append(("3-4-5 Euclidean distance", err(d, 5.0), 1e-12))
        d = closed_form_distance(kind, 3.0, [1, 0, 0], 4.0, [0, -1, 0])
        out.append(("3-4-5 closed form", err(d, 5.0), 1e-12))
        t = act(make_translator(kind, [1, 0, 0], 2.0), basepoint(kind))
        out.append(("shear moves basepoint by 2 i1", err(t.coords, [1, 2, 0, 0]), 1e-12))
    if kind == SPLIT:
        t = apply(make_translator(kind, [1, 0, 0], np.pi / 2), Minquat(kind, [1, 0, 0, 0]))
        out.append(("simple rotation by pi/2", err(t.coords, [0, 1, 0, 0]), 1e-12))
        d = distance(lift(kind, np.pi / 2, [1, 0, 0]), lift(kind, np.pi / 2, [0, 1, 0]))
        out.append(("right spherical triangle side", err(d, np.pi / 2), 1e-12))
        rot = matrix_of(make_rotor(kind, [0, 0, 1], 0.3))
        ref = np.eye(4)
        ref[1:3, 1:3] = [[np.cos(0.3), -np.sin(0.3)], [np.sin(0.3), np.cos(0.3)]]
        out.append(("rotor about i3 = plane rotation", err(rot, ref), 1e-12))
    return out


def suite_json(rng, kind, n):
    q = sampling.ext_quaternions(rng, kind, n, scale=1e3)
    bad = 0
    for i in range(n):
        back = ext_from_json(json.loads(dumps(ext_to_json(q[i]))))
        bad += int(np.any(back.alpha.data != q[i].alpha.data) or np.any(back.beta.data != q[i].beta.data))
    return [("JSON round trip is lossless (mismatches)", float(bad), 0.0)]


SUITES = {
    "rings": suite_rings,
    "quat": suite_quat,
    "involutions": suite_involutions,
    "qform": suite_qform,
    "degeneracy": suite_degeneracy,
    "decompose": suite_decompose,
    "action": suite_action,
    "spaceform": suite_spaceform,
    "golden": suite_golden,
    "json": suite_json,
}


def run_checks(seed: int = 42, samples: int = 1000, tolerance_scale: float = 1.0,
               kinds=KINDS, suites=None) -> list[CheckReport]:
    """Run every suite for every algebra; deterministic for a given seed."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    names = list(SUITES) if suites is None else list(suites)
    reports = []
    for kind in (UnitKind.parse(k) for k in kinds):
        for name in names:
            # one stream per (suite, algebra) so results do not depend on
            # which other suites were selected
            rng = np.random.default_rng([seed, list(SUITES).index(name), int(kind) + 1])
            report = CheckReport(f"{name}[{kind.label}]", samples)
            for inv, e, tol in SUITES[name](rng, kind, samples):
                report.results.append(InvariantResult(inv, float(e), tol * tolerance_scale))
            reports.append(report)
    return reports
