"""Executable invariant suite.

Every mathematical property promised by the library is restated here as a
named check that draws seeded random inputs, measures the worst residual,
and compares it to a fixed bound. The heavy identity sweeps are vectorized
with numpy (the scalar API is spot-checked against the vectorized
formulas in the test suite); everything touching representative and merge
machinery runs through the scalar functions themselves.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from . import belt
from .core import (
    E1,
    QUAT_I,
    QUAT_J,
    QUAT_K,
    QUAT_ONE,
    Quaternion,
    VectorPair,
    add,
    cross,
    dot,
    norm,
    quat_distance,
    quat_dot,
    quat_mul,
    quat_neg,
    quat_norm,
    scale,
    sub,
    swap,
    tmap,
)
from .interpolation import slerp_s2, slerp_s3
from .pairs import linear_combine, merge, overlap_unit, rep_with_first, rep_with_second
from .rotations import (
    MAT3_IDENTITY,
    align_matrix,
    align_matrix_3d,
    conjugate_vector,
    euler_rodrigues,
    mat3_apply,
    mat3_max_diff,
    mat3_mul,
    mat3_trace,
    mat3_transpose,
    reflect_line_matrix,
    rotation_angle,
    rotation_from_pair,
)
from .sampling import (
    random_orthogonal_unit,
    random_pair,
    random_unit_pair,
    random_unit_quaternion,
    random_unit_vector,
    random_vector,
)

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one invariant check.

    kind "max" passes when value <= bound; kind "min" (a separation bound)
    passes when value > bound.
    """

    name: str
    value: float
    bound: float
    kind: str = "max"

    @property
    def passed(self) -> bool:
        if math.isnan(self.value):
            return False
        return self.value <= self.bound if self.kind == "max" else self.value > self.bound


# ---------------------------------------------------------------------------
# vectorized helpers

def _rows_dot(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.einsum("ij,ij->i", a, b)


def _unit_rows(rng: np.random.Generator, n: int, dim: int = 3) -> np.ndarray:
    g = rng.standard_normal((n, dim))
    return g / np.linalg.norm(g, axis=1, keepdims=True)


def corollary_residuals(seed: int, samples: int) -> float:
    """Worst relative residual of the two three-vector identities over
    uniform random triples in [-1, 1]^3 (see core.identity_residuals)."""
    rng = np.random.default_rng(seed)
    a = rng.uniform(-1.0, 1.0, (samples, 3))
    b = rng.uniform(-1.0, 1.0, (samples, 3))
    c = rng.uniform(-1.0, 1.0, (samples, 3))
    ab = _rows_dot(a, b)
    bc = _rows_dot(b, c)
    ac = _rows_dot(a, c)
    bb = _rows_dot(b, b)
    axb = np.cross(a, b)
    bxc = np.cross(b, c)
    r_scalar = ac * bb - (ab * bc - _rows_dot(axb, bxc))
    r_vec = bb[:, None] * np.cross(a, c) - (
        ab[:, None] * bxc + bc[:, None] * axb + np.cross(bxc, axb)
    )
    # The identities are degree four, so scale by the product of magnitudes.
    na = np.linalg.norm(a, axis=1)
    nb = np.linalg.norm(b, axis=1)
    nc = np.linalg.norm(c, axis=1)
    rel = np.maximum(1.0, na * nb * nb * nc)
    worst = np.maximum(np.abs(r_scalar), np.abs(r_vec).max(axis=1)) / rel
    return float(worst.max())


def lbc_residuals(seed: int, samples: int) -> float:
    """Worst relative disagreement of the two Lagrange-Binet-Cauchy sides."""
    rng = np.random.default_rng(seed)
    a, b, c, d = (rng.uniform(-1.0, 1.0, (samples, 3)) for _ in range(4))
    lhs = _rows_dot(np.cross(a, b), np.cross(c, d))
    rhs = _rows_dot(a, c) * _rows_dot(b, d) - _rows_dot(a, d) * _rows_dot(b, c)
    mags = [np.linalg.norm(m, axis=1) for m in (a, b, c, d)]
    rel = np.maximum(1.0, mags[0] * mags[1] * mags[2] * mags[3])
    return float((np.abs(lhs - rhs) / rel).max())


def belt_point_grid(n_s: int, n_t: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Loop points on the uniform grid, shape (n_t+1, n_s+1, 3), plus the
    s and t sample values. Same formula as belt.belt_point."""
    s = np.linspace(0.0, TWO_PI, n_s + 1)
    t = np.linspace(0.0, TWO_PI, n_t + 1)
    grid_s, grid_t = np.meshgrid(s, t)
    quarter = 0.25 * grid_t
    sa = np.sin(quarter)
    ca = np.cos(quarter)
    cs = np.cos(grid_s)
    e = np.stack(
        [sa * sa - ca * ca * cs, ca * np.sin(grid_s), sa * ca * (1.0 + cs)], axis=-1
    )
    return e, s, t


def _belt_quat_grid(e: np.ndarray) -> np.ndarray:
    # tmap(e1, e) = [ex, (0, -ez, ey)]
    q = np.empty(e.shape[:-1] + (4,))
    q[..., 0] = e[..., 0]
    q[..., 1] = 0.0
    q[..., 2] = -e[..., 2]
    q[..., 3] = e[..., 1]
    return q


# ---------------------------------------------------------------------------
# core algebra

def check_tmap_bilinearity(seed: int, samples: int) -> CheckResult:
    rng = np.random.default_rng(seed)
    v = rng.uniform(-1.0, 1.0, (samples, 3))
    v2 = rng.uniform(-1.0, 1.0, (samples, 3))
    w = rng.uniform(-1.0, 1.0, (samples, 3))
    alpha = rng.uniform(-2.0, 2.0, (samples, 1))
    beta = rng.uniform(-2.0, 2.0, (samples, 1))
    combo = alpha * v + beta * v2
    lhs_s = _rows_dot(combo, w)
    lhs_v = np.cross(combo, w)
    rhs_s = alpha[:, 0] * _rows_dot(v, w) + beta[:, 0] * _rows_dot(v2, w)
    rhs_v = alpha * np.cross(v, w) + beta * np.cross(v2, w)
    rel = np.maximum(1.0, np.linalg.norm(combo, axis=1) * np.linalg.norm(w, axis=1))
    worst = np.maximum(np.abs(lhs_s - rhs_s), np.abs(lhs_v - rhs_v).max(axis=1)) / rel
    return CheckResult("tmap-bilinearity", float(worst.max()), 1e-12)


def check_tmap_norm_law(seed: int, samples: int) -> CheckResult:
    rng = np.random.default_rng(seed)
    v = rng.uniform(-1.0, 1.0, (samples, 3))
    w = rng.uniform(-1.0, 1.0, (samples, 3))
    prod_norm = np.hypot(_rows_dot(v, w), np.linalg.norm(np.cross(v, w), axis=1))
    expect = np.linalg.norm(v, axis=1) * np.linalg.norm(w, axis=1)
    worst = np.abs(prod_norm - expect) / np.maximum(1.0, expect)
    return CheckResult("tmap-norm-law", float(worst.max()), 1e-12)


def _qmul_rows(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.empty_like(a)
    out[:, 0] = a[:, 0] * b[:, 0] - _rows_dot(a[:, 1:], b[:, 1:])
    out[:, 1:] = (
        b[:, :1] * a[:, 1:] + a[:, :1] * b[:, 1:] + np.cross(a[:, 1:], b[:, 1:])
    )
    return out


def check_quat_mul_norm(seed: int, samples: int) -> CheckResult:
    rng = np.random.default_rng(seed)
    a = rng.uniform(-1.0, 1.0, (samples, 4))
    b = rng.uniform(-1.0, 1.0, (samples, 4))
    prod = _qmul_rows(a, b)
    expect = np.linalg.norm(a, axis=1) * np.linalg.norm(b, axis=1)
    worst = np.abs(np.linalg.norm(prod, axis=1) - expect) / np.maximum(1.0, expect)
    return CheckResult("quat-mul-norm", float(worst.max()), 1e-12)


def check_hamilton_relations(seed: int, samples: int) -> CheckResult:
    minus_one = Quaternion(-1.0, (0.0, 0.0, 0.0))
    cases = [
        (quat_mul(QUAT_I, QUAT_I), minus_one),
        (quat_mul(QUAT_J, QUAT_J), minus_one),
        (quat_mul(QUAT_K, QUAT_K), minus_one),
        (quat_mul(quat_mul(QUAT_I, QUAT_J), QUAT_K), minus_one),
        (quat_mul(QUAT_I, QUAT_J), QUAT_K),
        (quat_mul(QUAT_J, QUAT_I), quat_neg(QUAT_K)),
        (quat_mul(QUAT_J, QUAT_K), QUAT_I),
        (quat_mul(QUAT_K, QUAT_J), quat_neg(QUAT_I)),
        (quat_mul(QUAT_K, QUAT_I), QUAT_J),
        (quat_mul(QUAT_I, QUAT_K), quat_neg(QUAT_J)),
        (quat_mul(QUAT_ONE, QUAT_I), QUAT_I),
    ]
    worst = max(quat_distance(got, want) for got, want in cases)
    return CheckResult("hamilton-relations", worst, 0.0)


def check_quat_mul_associativity(seed: int, samples: int) -> CheckResult:
    rng = np.random.default_rng(seed)
    a = rng.uniform(-1.0, 1.0, (samples, 4))
    b = rng.uniform(-1.0, 1.0, (samples, 4))
    c = rng.uniform(-1.0, 1.0, (samples, 4))
    left = _qmul_rows(_qmul_rows(a, b), c)
    right = _qmul_rows(a, _qmul_rows(b, c))
    rel = np.maximum(
        1.0,
        np.linalg.norm(a, axis=1) * np.linalg.norm(b, axis=1) * np.linalg.norm(c, axis=1),
    )
    worst = float((np.abs(left - right).max(axis=1) / rel).max())
    # Non-commutativity witness: i j = -(j i) = k must not degrade to zero.
    if quat_distance(quat_mul(QUAT_I, QUAT_J), quat_mul(QUAT_J, QUAT_I)) != 2.0:
        worst = math.inf
    return CheckResult("quat-mul-associativity", worst, 1e-12)


def check_coplanar_degeneration(seed: int, samples: int) -> CheckResult:
    """Pairs confined to the e1-e2 plane multiply like complex numbers:
    vector parts stay on the e3 axis and angles add."""
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(samples):
        a1, b1, a2, b2 = (rng.uniform(0.0, TWO_PI) for _ in range(4))
        r1, r2, r3, r4 = (rng.uniform(0.5, 2.0) for _ in range(4))
        p1 = VectorPair(
            (r1 * math.cos(a1), r1 * math.sin(a1), 0.0),
            (r2 * math.cos(b1), r2 * math.sin(b1), 0.0),
        )
        p2 = VectorPair(
            (r3 * math.cos(a2), r3 * math.sin(a2), 0.0),
            (r4 * math.cos(b2), r4 * math.sin(b2), 0.0),
        )
        prod = quat_mul(tmap(p2), tmap(p1))
        planar = max(abs(prod.v[0]), abs(prod.v[1]))
        mag = r1 * r2 * r3 * r4
        theta = (b1 - a1) + (b2 - a2)
        residual = max(
            planar,
            abs(prod.s - mag * math.cos(theta)) / max(1.0, mag),
            abs(prod.v[2] - mag * math.sin(theta)) / max(1.0, mag),
        )
        worst = max(worst, residual)
    return CheckResult("coplanar-degeneration", worst, 1e-12)


def check_corollary_identities(seed: int, samples: int) -> CheckResult:
    return CheckResult("corollary-identities", corollary_residuals(seed, samples), 1e-12)


def check_lbc_identity(seed: int, samples: int) -> CheckResult:
    return CheckResult("lbc-identity", lbc_residuals(seed, samples), 1e-12)


# ---------------------------------------------------------------------------
# pair construction

def _random_nonzero_quat(rng: random.Random) -> Quaternion:
    while True:
        q = Quaternion(rng.uniform(-1.0, 1.0), random_vector(rng))
        if quat_norm(q) > 0.05:
            return q


def check_rep_round_trip(seed: int, samples: int) -> CheckResult:
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(samples):
        q = _random_nonzero_quat(rng)
        u = random_orthogonal_unit(rng, q.v)
        rel = max(1.0, quat_norm(q))
        for rep in (rep_with_first(q, u), rep_with_second(q, u)):
            worst = max(worst, quat_distance(tmap(rep), q) / rel)
        worst = max(worst, abs(norm(rep_with_second(q, u).first) - quat_norm(q)) / rel)
        worst = max(worst, abs(norm(rep_with_first(q, u).second) - quat_norm(q)) / rel)
    return CheckResult("rep-round-trip", worst, 1e-12)


def check_merge_homomorphism(seed: int, samples: int) -> CheckResult:
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(samples):
        left = random_pair(rng)
        right = random_pair(rng)
        a = tmap(left)
        b = tmap(right)
        if quat_norm(a) < 1e-3 or quat_norm(b) < 1e-3:
            continue
        got = tmap(merge(left, right))
        want = quat_mul(a, b)
        worst = max(worst, quat_distance(got, want) / max(1.0, quat_norm(a) * quat_norm(b)))
    return CheckResult("merge-homomorphism", worst, 1e-12)


def _rotate_pair_in_class(rng: random.Random, p: VectorPair) -> VectorPair:
    # Rotating both vectors about their cross product stays in the class.
    axis = cross(p.first, p.second)
    n = norm(axis)
    if n < 1e-6:
        return p
    half = rng.uniform(0.0, math.pi)
    q = Quaternion(math.cos(half), scale(math.sin(half) / n, axis))
    r = euler_rodrigues(q)
    return VectorPair(mat3_apply(r, p.first), mat3_apply(r, p.second))


def check_merge_well_defined(seed: int, samples: int) -> CheckResult:
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(samples):
        left = random_pair(rng)
        right = random_pair(rng)
        if quat_norm(tmap(left)) < 1e-3 or quat_norm(tmap(right)) < 1e-3:
            continue
        base = tmap(merge(left, right))
        alt_left = tmap(merge(_rotate_pair_in_class(rng, left), right))
        alt_right = tmap(merge(left, _rotate_pair_in_class(rng, right)))
        rel = max(1.0, quat_norm(base))
        worst = max(worst, quat_distance(base, alt_left) / rel, quat_distance(base, alt_right) / rel)
    return CheckResult("merge-well-defined", worst, 1e-10)


def check_merge_inverse(seed: int, samples: int) -> CheckResult:
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(samples):
        p = random_unit_pair(rng)
        worst = max(worst, quat_distance(tmap(merge(p, swap(p))), QUAT_ONE))
    return CheckResult("merge-inverse", worst, 1e-12)


def check_linear_combine(seed: int, samples: int) -> CheckResult:
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(samples):
        a = _random_nonzero_quat(rng)
        b = _random_nonzero_quat(rng)
        ca = rng.uniform(-2.0, 2.0)
        cb = rng.uniform(-2.0, 2.0)
        got = linear_combine(a, b, ca, cb)
        want = Quaternion(
            ca * a.s + cb * b.s, add(scale(ca, a.v), scale(cb, b.v))
        )
        rel = max(1.0, abs(ca) * quat_norm(a) + abs(cb) * quat_norm(b))
        worst = max(worst, quat_distance(got, want) / rel)
    return CheckResult("linear-combine", worst, 1e-12)


# ---------------------------------------------------------------------------
# rotations

def check_double_cover_sign(seed: int, samples: int) -> CheckResult:
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(samples):
        q = random_unit_quaternion(rng)
        worst = max(worst, mat3_max_diff(euler_rodrigues(q), euler_rodrigues(quat_neg(q))))
        p = random_unit_pair(rng)
        flipped = VectorPair((-p.first[0], -p.first[1], -p.first[2]), p.second)
        worst = max(
            worst,
            mat3_max_diff(
                rotation_from_pair(p.first, p.second),
                rotation_from_pair(flipped.first, flipped.second),
            ),
        )
    return CheckResult("double-cover-sign", worst, 0.0)


def check_double_cover_matrix(seed: int, samples: int) -> CheckResult:
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(samples):
        p = random_unit_pair(rng)
        worst = max(
            worst,
            mat3_max_diff(rotation_from_pair(p.first, p.second), euler_rodrigues(tmap(p))),
        )
    return CheckResult("double-cover-matrix", worst, 1e-10)


def check_rotation_kernel_identity(seed: int, samples: int) -> CheckResult:
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(samples):
        u = random_unit_vector(rng)
        neg_u = (-u[0], -u[1], -u[2])
        worst = max(
            worst,
            mat3_max_diff(rotation_from_pair(u, u), MAT3_IDENTITY),
            mat3_max_diff(rotation_from_pair(u, neg_u), MAT3_IDENTITY),
        )
    return CheckResult("rotation-kernel-identity", worst, 1e-12)


def check_rotation_kernel_separation(seed: int, samples: int) -> CheckResult:
    rng = random.Random(seed)
    least = math.inf
    for _ in range(samples):
        u = random_unit_vector(rng)
        while True:
            v = random_unit_vector(rng)
            if abs(dot(u, v)) < 1.0 - 1e-6:
                break
        moved = mat3_apply(rotation_from_pair(u, v), u)
        least = min(least, norm(sub(moved, u)))
    return CheckResult("rotation-kernel-separation", least, 1e-6, kind="min")


def check_angle_doubling(seed: int, samples: int) -> CheckResult:
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(samples):
        p = random_unit_pair(rng)
        doubled = 2.0 * math.acos(min(1.0, max(-1.0, dot(p.first, p.second))))
        folded = min(doubled, TWO_PI - doubled)
        got = rotation_angle(rotation_from_pair(p.first, p.second))
        worst = max(worst, abs(got - folded))
    return CheckResult("angle-doubling", worst, 1e-9)


def check_rotation_homomorphism(seed: int, samples: int) -> CheckResult:
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(samples):
        p1 = random_unit_pair(rng)
        p2 = random_unit_pair(rng)
        merged = merge(p1, p2)
        lhs = rotation_from_pair(merged.first, merged.second)
        rhs = mat3_mul(
            rotation_from_pair(p1.first, p1.second), rotation_from_pair(p2.first, p2.second)
        )
        worst = max(worst, mat3_max_diff(lhs, rhs))
    return CheckResult("rotation-homomorphism", worst, 1e-10)


def check_reflection_equivariance(seed: int, samples: int) -> CheckResult:
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(samples):
        r = euler_rodrigues(random_unit_quaternion(rng))
        u = random_unit_vector(rng)
        lhs = reflect_line_matrix(mat3_apply(r, u))
        rhs = mat3_mul(mat3_mul(r, reflect_line_matrix(u)), mat3_transpose(r))
        worst = max(worst, mat3_max_diff(lhs, rhs))
    return CheckResult("reflection-equivariance", worst, 1e-12)


def check_align_consistency(seed: int, samples: int) -> CheckResult:
    """The alignment rotation equals the double-cover image of the
    half-angle pair (u_initial, midpoint direction), by both formulas."""
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(samples):
        u_i = random_unit_vector(rng)
        while True:
            u_f = random_unit_vector(rng)
            if 1.0 + dot(u_i, u_f) > 1e-6:
                break
        mid = scale(1.0 / norm(add(u_i, u_f)), add(u_i, u_f))
        via_cover = euler_rodrigues(tmap(VectorPair(u_i, mid)))
        generic = align_matrix(u_i, u_f)
        kernel = align_matrix_3d(u_i, u_f)
        worst = max(
            worst,
            float(np.abs(generic - np.array(via_cover)).max()),
            mat3_max_diff(kernel, via_cover),
        )
    return CheckResult("align-consistency", worst, 1e-10)


def check_conjugation_invariants(seed: int, samples: int) -> CheckResult:
    """Conjugating [c, x] by a unit quaternion preserves the scalar part
    and the vector norm, and rotates x by the matrix image."""
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(samples):
        q = random_unit_quaternion(rng)
        x = random_vector(rng, -2.0, 2.0)
        c = rng.uniform(-2.0, 2.0)
        y = conjugate_vector(q, x)
        rel = max(1.0, norm(x), abs(c))
        conj = Quaternion(q.s, (-q.v[0], -q.v[1], -q.v[2]))
        sandwich = quat_mul(quat_mul(q, Quaternion(c, x)), conj)
        worst = max(
            worst,
            abs(norm(y) - norm(x)) / rel,
            abs(sandwich.s - c) / rel,
            max(abs(a - b) for a, b in zip(sandwich.v, y)) / rel,
            max(abs(a) for a in sub(y, mat3_apply(euler_rodrigues(q), x))) / rel,
        )
    return CheckResult("conjugation-invariants", worst, 1e-12)


# ---------------------------------------------------------------------------
# interpolation

def _random_separated_unit_quats(rng: random.Random) -> tuple[Quaternion, Quaternion]:
    """Unit endpoints whose angle lies in (0.1, 3.0)."""
    a = random_unit_quaternion(rng)
    omega = rng.uniform(0.1, 3.0)
    while True:
        d = random_unit_quaternion(rng)
        ortho = Quaternion(d.s - quat_dot(d, a) * a.s, sub(d.v, scale(quat_dot(d, a), a.v)))
        n = quat_norm(ortho)
        if n > 1e-3:
            unit_ortho = Quaternion(ortho.s / n, scale(1.0 / n, ortho.v))
            b = Quaternion(
                math.cos(omega) * a.s + math.sin(omega) * unit_ortho.s,
                add(scale(math.cos(omega), a.v), scale(math.sin(omega), unit_ortho.v)),
            )
            return a, b


def check_slerp_symmetry(seed: int, samples: int) -> CheckResult:
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(samples):
        a, b = _random_separated_unit_quats(rng)
        t = rng.uniform(0.0, 1.0)
        worst = max(worst, quat_distance(slerp_s3(a, b, t), slerp_s3(b, a, 1.0 - t)))
    return CheckResult("slerp-symmetry", worst, 1e-12)


def check_slerp_dot_transfer(seed: int, samples: int) -> CheckResult:
    """The R^4 inner product of the endpoints equals the inner product of
    the shared-first-element second vectors, as the product identity for
    cross products demands."""
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(samples):
        a, b = _random_separated_unit_quats(rng)
        u = overlap_unit(a, b).u
        w = rep_with_first(a, u).second
        w2 = rep_with_first(b, u).second
        worst = max(worst, abs(dot(w, w2) - quat_dot(a, b)))
        lhs = dot(cross(u, w), cross(u, w2))
        rhs = dot(u, u) * dot(w, w2) - dot(u, w2) * dot(w, u)
        worst = max(worst, abs(lhs - rhs))
    return CheckResult("slerp-dot-transfer", worst, 1e-12)


def check_slerp_s2_matches_s3(seed: int, samples: int) -> CheckResult:
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(samples):
        a, b = _random_separated_unit_quats(rng)
        for t in (0.0, 0.25, 0.5, 0.75, 1.0):
            worst = max(worst, quat_distance(slerp_s2(a, b, t), slerp_s3(a, b, t)))
    return CheckResult("slerp-s2-vs-s3", worst, 1e-10)


# ---------------------------------------------------------------------------
# belt homotopy

def check_belt_unit_norm(seed: int, samples: int) -> CheckResult:
    e, _, _ = belt_point_grid(360, 360)
    worst = float(np.abs(np.linalg.norm(e, axis=-1) - 1.0).max())
    return CheckResult("belt-unit-norm", worst, 1e-14)


def check_belt_endpoint_collapse(seed: int, samples: int) -> CheckResult:
    worst = 0.0
    for i in range(361):
        s = TWO_PI * i / 360
        worst = max(worst, norm(sub(belt.belt_point(s, TWO_PI), E1)))
        worst = max(worst, mat3_max_diff(belt.belt_rotation(s, TWO_PI), MAT3_IDENTITY))
    return CheckResult("belt-endpoint-collapse", worst, 1e-12)


def check_belt_double_turn(seed: int, samples: int) -> CheckResult:
    worst = 0.0
    for i in range(361):
        s = TWO_PI * i / 360
        trace = mat3_trace(belt.belt_rotation(s, 0.0))
        worst = max(worst, abs(trace - (1.0 + 2.0 * math.cos(2.0 * s))))
    return CheckResult("belt-double-turn", worst, 1e-10)


def check_belt_continuity(seed: int, samples: int) -> CheckResult:
    """Adjacent grid samples of the loop point and quaternion move less
    than ten grid steps on a 1000 x 1000 grid."""
    n = 1000
    e, _, _ = belt_point_grid(n, n)
    q = _belt_quat_grid(e)
    step = TWO_PI / n
    worst = 0.0
    for arr in (e, q):
        worst = max(
            worst,
            float(np.linalg.norm(np.diff(arr, axis=0), axis=-1).max()),
            float(np.linalg.norm(np.diff(arr, axis=1), axis=-1).max()),
        )
    return CheckResult("belt-continuity", worst, 10.0 * step)


def check_belt_double_cover(seed: int, samples: int) -> CheckResult:
    worst = 0.0
    steps = 60
    for j in range(steps + 1):
        t = TWO_PI * j / steps
        for i in range(steps + 1):
            s = TWO_PI * i / steps
            worst = max(
                worst,
                mat3_max_diff(belt.belt_rotation(s, t), euler_rodrigues(belt.belt_quaternion(s, t))),
            )
    return CheckResult("belt-double-cover", worst, 1e-10)


def check_belt_loop_closure(seed: int, samples: int) -> CheckResult:
    worst = 0.0
    for j in range(121):
        t = TWO_PI * j / 120
        worst = max(worst, norm(sub(belt.belt_point(0.0, t), belt.belt_point(TWO_PI, t))))
        worst = max(
            worst,
            quat_distance(belt.belt_quaternion(0.0, t), belt.belt_quaternion(TWO_PI, t)),
        )
        worst = max(
            worst, mat3_max_diff(belt.belt_rotation(0.0, t), belt.belt_rotation(TWO_PI, t))
        )
    return CheckResult("belt-loop-closure", worst, 1e-12)


# ---------------------------------------------------------------------------

ALL_CHECKS = [
    check_tmap_bilinearity,
    check_tmap_norm_law,
    check_quat_mul_norm,
    check_hamilton_relations,
    check_quat_mul_associativity,
    check_coplanar_degeneration,
    check_corollary_identities,
    check_lbc_identity,
    check_rep_round_trip,
    check_merge_homomorphism,
    check_merge_well_defined,
    check_merge_inverse,
    check_linear_combine,
    check_double_cover_sign,
    check_double_cover_matrix,
    check_rotation_kernel_identity,
    check_rotation_kernel_separation,
    check_angle_doubling,
    check_rotation_homomorphism,
    check_reflection_equivariance,
    check_align_consistency,
    check_conjugation_invariants,
    check_slerp_symmetry,
    check_slerp_dot_transfer,
    check_slerp_s2_matches_s3,
    check_belt_unit_norm,
    check_belt_endpoint_collapse,
    check_belt_double_turn,
    check_belt_continuity,
    check_belt_double_cover,
    check_belt_loop_closure,
]


def run_all(seed: int = 0, iters: int = 1000) -> list[CheckResult]:
    """Run every invariant check with per-check derived seeds."""
    if iters < 1:
        raise ValueError("iters must be >= 1")
    return [fn(seed + idx, iters) for idx, fn in enumerate(ALL_CHECKS)]
