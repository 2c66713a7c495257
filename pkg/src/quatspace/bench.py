"""Timing of the two ways to transform a batch of minquats.

``sandwich``: q v barstar(q) evaluated in the algebra for every element.
``matrix``: M = matrix_of(q) once, then M @ v for every element.
"""

from __future__ import annotations

import time

import numpy as np

from . import sampling
from .action import Minquat, apply, apply_matrix, matrix_of
from .rings import KINDS, UnitKind

AGREEMENT_TOL = 1e-10


def _time(fn, n):
    start = time.perf_counter()
    for _ in range(n):
        out = fn()
    return time.perf_counter() - start, out


def bench_kind(kind, n: int, batch: int, seed: int = 0) -> dict:
    kind = UnitKind.parse(kind)
    if n < 1 or batch < 1:
        raise ValueError("n and batch must be >= 1")
    rng = np.random.default_rng([seed, int(kind) + 1])
    q = sampling.unit_elements(rng, kind, 1)[0]
    v = Minquat(kind, rng.uniform(-2.0, 2.0, (batch, 4)))

    t_sandwich, out_s = _time(lambda: apply(q, v), n)

    def matrix_pipeline():
        return apply_matrix(matrix_of(q), v)

    t_matrix, out_m = _time(matrix_pipeline, n)
    scale = np.maximum(1.0, np.abs(out_s.coords))
    max_diff = float(np.max(np.abs(out_s.coords - out_m.coords) / scale))
    ops = n * batch
    return {
        "algebra": kind.label,
        "n": n,
        "batch": batch,
        "sandwich_ns_per_op": t_sandwich / ops * 1e9,
        "matrix_ns_per_op": t_matrix / ops * 1e9,
        "max_difference": max_diff,
        "agree": max_diff <= AGREEMENT_TOL,
    }


def run_bench(n: int = 10, batch: int = 100_000, kinds=KINDS, seed: int = 0) -> list[dict]:
    return [bench_kind(k, n, batch, seed) for k in kinds]
