"""Seeded random inputs for tests, invariant sweeps, and benchmarks."""

from __future__ import annotations

import random

from .core import Quaternion, Vec3, VectorPair, add, normalize, scale


def random_vector(rng: random.Random, lo: float = -1.0, hi: float = 1.0) -> Vec3:
    return (rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi))


def random_unit_vector(rng: random.Random) -> Vec3:
    while True:
        v = (rng.gauss(0.0, 1.0), rng.gauss(0.0, 1.0), rng.gauss(0.0, 1.0))
        n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]) ** 0.5
        if n > 1e-3:
            return (v[0] / n, v[1] / n, v[2] / n)


def random_unit_quaternion(rng: random.Random) -> Quaternion:
    while True:
        c = [rng.gauss(0.0, 1.0) for _ in range(4)]
        n = sum(x * x for x in c) ** 0.5
        if n > 1e-3:
            return Quaternion(c[0] / n, (c[1] / n, c[2] / n, c[3] / n))


def random_pair(rng: random.Random, lo: float = -1.0, hi: float = 1.0) -> VectorPair:
    return VectorPair(random_vector(rng, lo, hi), random_vector(rng, lo, hi))


def random_unit_pair(rng: random.Random) -> VectorPair:
    return VectorPair(random_unit_vector(rng), random_unit_vector(rng))


def random_orthogonal_unit(rng: random.Random, v: Vec3) -> Vec3:
    """Unit vector orthogonal to v (any unit vector when v is zero)."""
    vv = v[0] * v[0] + v[1] * v[1] + v[2] * v[2]
    while True:
        cand = random_unit_vector(rng)
        if vv == 0.0:
            return cand
        d = cand[0] * v[0] + cand[1] * v[1] + cand[2] * v[2]
        residual = add(cand, scale(-d / vv, v))
        rn = (residual[0] ** 2 + residual[1] ** 2 + residual[2] ** 2) ** 0.5
        if rn > 1e-6:
            return normalize(residual)
