"""Cross-validation against SciPy's rotation machinery, when available.

An implementation-independent check: the quaternion-to-matrix map and the
vector-alignment rotation must agree with a widely used third-party
implementation to machine precision. Skipped where SciPy is absent.
"""

import random

import numpy as np
import pytest

scipy_rotation = pytest.importorskip("scipy.spatial.transform")

from pairquat.core import Quaternion, dot
from pairquat.rotations import align_matrix, conjugate_vector, euler_rodrigues
from pairquat.sampling import random_unit_quaternion, random_unit_vector

Rotation = scipy_rotation.Rotation


def test_euler_rodrigues_matches_scipy():
    rng = random.Random(123)
    worst = 0.0
    for _ in range(500):
        q = random_unit_quaternion(rng)
        mine = np.array(euler_rodrigues(q))
        ref = Rotation.from_quat([q.v[0], q.v[1], q.v[2], q.s]).as_matrix()
        worst = max(worst, float(np.abs(mine - ref).max()))
    assert worst <= 1e-12


def test_conjugation_matches_scipy_apply():
    rng = random.Random(321)
    worst = 0.0
    for _ in range(500):
        q = random_unit_quaternion(rng)
        x = (rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2))
        mine = np.array(conjugate_vector(q, x))
        ref = Rotation.from_quat([q.v[0], q.v[1], q.v[2], q.s]).apply(x)
        worst = max(worst, float(np.abs(mine - ref).max()))
    assert worst <= 1e-12


def test_align_matrix_matches_scipy_align_vectors():
    # For a single exact vector pair, align_vectors returns the same
    # minimal rotation the alignment formula constructs.
    rng = random.Random(7)
    worst = 0.0
    for _ in range(500):
        a = random_unit_vector(rng)
        while True:
            b = random_unit_vector(rng)
            if 1.0 + dot(a, b) > 1e-6:
                break
        mine = align_matrix(a, b)
        ref, _ = Rotation.align_vectors([b], [a])
        worst = max(worst, float(np.abs(mine - ref.as_matrix()).max()))
    assert worst <= 1e-12


def test_hamilton_product_matches_scipy_composition():
    rng = random.Random(55)
    from pairquat.core import quat_mul

    worst = 0.0
    for _ in range(500):
        a = random_unit_quaternion(rng)
        b = random_unit_quaternion(rng)
        got = quat_mul(a, b)
        ref = Rotation.from_quat([a.v[0], a.v[1], a.v[2], a.s]) * Rotation.from_quat(
            [b.v[0], b.v[1], b.v[2], b.s]
        )
        rx, ry, rz, rs = ref.as_quat()
        ref_q = Quaternion(rs, (rx, ry, rz))
        # Rotations identify q with -q; compare up to that sign.
        direct = max(
            abs(got.s - ref_q.s),
            max(abs(g - r) for g, r in zip(got.v, ref_q.v)),
        )
        flipped = max(
            abs(got.s + ref_q.s),
            max(abs(g + r) for g, r in zip(got.v, ref_q.v)),
        )
        worst = max(worst, min(direct, flipped))
    assert worst <= 1e-12
