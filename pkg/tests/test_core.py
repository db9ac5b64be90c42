"""Core algebra: the pair map, equivalence, products, and the vector identities."""

import math
import random

import pytest
from hypothesis import given, strategies as st

from pairquat.core import (
    E1,
    E2,
    E3,
    QUAT_I,
    QUAT_J,
    QUAT_K,
    QUAT_ONE,
    Quaternion,
    VectorPair,
    add,
    cross,
    dot,
    identity_residuals,
    lbc_both_sides,
    norm,
    pairs_equivalent,
    quat_conjugate,
    quat_distance,
    quat_mul,
    quat_norm,
    quat_normalize,
    scale,
    tmap,
)
from pairquat.errors import ZeroQuaternion
from pairquat.rotations import euler_rodrigues, mat3_apply

from _utils import assert_quat_close

finite = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False, allow_infinity=False)
vec3s = st.tuples(finite, finite, finite)


class TestTmap:
    def test_orthonormal_pair(self):
        assert tmap(VectorPair(E1, E2)) == Quaternion(0.0, E3)

    def test_identity_class(self):
        u = (0.6, 0.8, 0.0)
        q = tmap(VectorPair(u, u))
        assert_quat_close(q, QUAT_ONE, tol=1e-15)

    def test_worked_integer_pair(self):
        a, b = (1.0, 2.0, 3.0), (4.0, 5.0, 6.0)
        # Componentwise oracle, written out longhand.
        expected_dot = 1.0 * 4.0 + 2.0 * 5.0 + 3.0 * 6.0
        expected_cross = (2.0 * 6.0 - 3.0 * 5.0, 3.0 * 4.0 - 1.0 * 6.0, 1.0 * 5.0 - 2.0 * 4.0)
        q = tmap(VectorPair(a, b))
        assert q == Quaternion(expected_dot, expected_cross)
        assert q == Quaternion(32.0, (-3.0, 6.0, -3.0))

    @given(vec3s, vec3s, vec3s, finite, finite)
    def test_bilinear_in_first_slot(self, v, v2, w, alpha, beta):
        combo = add(scale(alpha, v), scale(beta, v2))
        lhs = tmap(VectorPair(combo, w))
        rhs_s = alpha * dot(v, w) + beta * dot(v2, w)
        rhs_v = add(scale(alpha, cross(v, w)), scale(beta, cross(v2, w)))
        rel = max(1.0, norm(combo) * norm(w))
        assert quat_distance(lhs, Quaternion(rhs_s, rhs_v)) <= 1e-12 * rel

    @given(vec3s, vec3s)
    def test_norm_law(self, v, w):
        # |v|^2 |w|^2 = (v.w)^2 + |v x w|^2
        q = tmap(VectorPair(v, w))
        expect = norm(v) * norm(w)
        assert abs(quat_norm(q) - expect) <= 1e-12 * max(1.0, expect)

    @given(vec3s, vec3s)
    def test_swap_is_conjugate(self, v, w):
        assert tmap(VectorPair(w, v)) == quat_conjugate(tmap(VectorPair(v, w)))


class TestPairsEquivalent:
    def test_rotation_fixing_cross_product_stays_in_class(self):
        rng = random.Random(11)
        for _ in range(50):
            v = (rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1))
            w = (rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1))
            axis = cross(v, w)
            n = norm(axis)
            if n < 1e-3:
                continue
            half = rng.uniform(0, math.pi)
            r = euler_rodrigues(Quaternion(math.cos(half), scale(math.sin(half) / n, axis)))
            rotated = VectorPair(mat3_apply(r, v), mat3_apply(r, w))
            assert pairs_equivalent(VectorPair(v, w), rotated, 1e-12)

    def test_reciprocal_scaling_is_exact(self):
        v, w = (0.3, -1.25, 2.0), (1.5, 0.725, -0.375)
        scaled = VectorPair(scale(2.0, v), scale(0.5, w))
        assert pairs_equivalent(VectorPair(v, w), scaled, 0.0)

    def test_swapped_basis_pair_differs(self):
        assert not pairs_equivalent(VectorPair(E1, E2), VectorPair(E2, E1), 1e-9)

    def test_negative_tol_rejected(self):
        with pytest.raises(ValueError):
            pairs_equivalent(VectorPair(E1, E2), VectorPair(E1, E2), -1.0)


class TestQuatMul:
    def test_hamilton_table(self):
        minus_one = Quaternion(-1.0, (0.0, 0.0, 0.0))
        assert quat_mul(QUAT_I, QUAT_J) == QUAT_K
        assert quat_mul(QUAT_J, QUAT_I) == Quaternion(0.0, (0.0, 0.0, -1.0))
        assert quat_mul(QUAT_I, QUAT_I) == minus_one
        assert quat_mul(QUAT_J, QUAT_J) == minus_one
        assert quat_mul(QUAT_K, QUAT_K) == minus_one
        assert quat_mul(quat_mul(QUAT_I, QUAT_J), QUAT_K) == minus_one

    @given(st.tuples(finite, vec3s))
    def test_identity_element(self, parts):
        b = Quaternion(parts[0], parts[1])
        assert quat_mul(QUAT_ONE, b) == b
        assert quat_mul(b, QUAT_ONE) == b

    @given(st.tuples(finite, vec3s), st.tuples(finite, vec3s))
    def test_norm_multiplicative(self, pa, pb):
        a = Quaternion(pa[0], pa[1])
        b = Quaternion(pb[0], pb[1])
        expect = quat_norm(a) * quat_norm(b)
        assert abs(quat_norm(quat_mul(a, b)) - expect) <= 1e-12 * max(1.0, expect)

    @given(st.tuples(finite, vec3s), st.tuples(finite, vec3s), st.tuples(finite, vec3s))
    def test_associative(self, pa, pb, pc):
        a, b, c = (Quaternion(p[0], p[1]) for p in (pa, pb, pc))
        left = quat_mul(quat_mul(a, b), c)
        right = quat_mul(a, quat_mul(b, c))
        rel = max(1.0, quat_norm(a) * quat_norm(b) * quat_norm(c))
        assert quat_distance(left, right) <= 1e-12 * rel

    def test_conjugate_basics(self):
        assert quat_conjugate(QUAT_K) == Quaternion(0.0, (-0.0, -0.0, -1.0))
        assert quat_conjugate(QUAT_ONE) == Quaternion(1.0, (-0.0, -0.0, -0.0))
        u = quat_normalize(Quaternion(0.3, (0.1, -0.9, 0.4)))
        assert_quat_close(quat_mul(u, quat_conjugate(u)), QUAT_ONE, tol=1e-15)

    def test_normalize_zero_raises(self):
        with pytest.raises(ZeroQuaternion):
            quat_normalize(Quaternion(0.0, (0.0, 0.0, 0.0)))

    def test_coplanar_products_are_complex_multiplication(self):
        rng = random.Random(3)
        for _ in range(100):
            a1, b1, a2, b2 = (rng.uniform(0, 2 * math.pi) for _ in range(4))
            p1 = VectorPair(
                (math.cos(a1), math.sin(a1), 0.0), (math.cos(b1), math.sin(b1), 0.0)
            )
            p2 = VectorPair(
                (math.cos(a2), math.sin(a2), 0.0), (math.cos(b2), math.sin(b2), 0.0)
            )
            prod = quat_mul(tmap(p2), tmap(p1))
            assert prod.v[0] == 0.0 and prod.v[1] == 0.0
            theta = (b1 - a1) + (b2 - a2)
            assert abs(prod.s - math.cos(theta)) <= 1e-12
            assert abs(prod.v[2] - math.sin(theta)) <= 1e-12


class TestIdentityResiduals:
    def test_basis_triple_both_sides(self):
        # Evaluate both sides of each identity longhand for (e1, e2, e3).
        a, b, c = E1, E2, E3
        lhs_scalar = dot(a, c) * dot(b, b)
        rhs_scalar = dot(a, b) * dot(b, c) - dot(cross(a, b), cross(b, c))
        assert lhs_scalar == rhs_scalar == 0.0
        lhs_vec = scale(dot(b, b), cross(a, c))
        rhs_vec = add(
            add(scale(dot(a, b), cross(b, c)), scale(dot(b, c), cross(a, b))),
            cross(cross(b, c), cross(a, b)),
        )
        assert lhs_vec == rhs_vec == (0.0, -1.0, 0.0)
        r_s, r_v = identity_residuals(a, b, c)
        assert r_s == 0.0 and r_v == (0.0, 0.0, 0.0)

    def test_zero_middle_vector(self):
        r_s, r_v = identity_residuals((1.2, -0.3, 0.77), (0.0, 0.0, 0.0), (5.0, 2.0, -1.0))
        assert r_s == 0.0 and r_v == (0.0, 0.0, 0.0)

    @given(vec3s, vec3s, vec3s)
    def test_random_triples_vanish(self, a, b, c):
        r_s, r_v = identity_residuals(a, b, c)
        rel = max(1.0, norm(a) * norm(b) ** 2 * norm(c))
        assert abs(r_s) <= 1e-12 * rel
        assert max(abs(x) for x in r_v) <= 1e-12 * rel

    @given(vec3s, vec3s, vec3s)
    def test_cyclic_permutations_also_vanish(self, a, b, c):
        # The distinguished middle slot notwithstanding, any rotation of the
        # triple satisfies the same identities.
        for triple in ((b, c, a), (c, a, b)):
            r_s, r_v = identity_residuals(*triple)
            rel = max(1.0, norm(triple[0]) * norm(triple[1]) ** 2 * norm(triple[2]))
            assert abs(r_s) <= 1e-12 * rel
            assert max(abs(x) for x in r_v) <= 1e-12 * rel


class TestLagrangeBinetCauchy:
    def test_orthonormal_quadruples(self):
        assert lbc_both_sides(E1, E2, E1, E2) == (1.0, 1.0)
        lhs, rhs = lbc_both_sides(E1, E2, E2, E1)
        assert lhs == rhs == -1.0

    @given(vec3s, vec3s, vec3s, vec3s)
    def test_random_quadruples_agree(self, a, b, c, d):
        lhs, rhs = lbc_both_sides(a, b, c, d)
        rel = max(1.0, norm(a) * norm(b) * norm(c) * norm(d))
        assert abs(lhs - rhs) <= 1e-12 * rel
