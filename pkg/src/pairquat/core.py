"""Scalar 3-vector and quaternion arithmetic.

A quaternion is stored as a scalar part plus a 3-vector part. The bridge
between the two worlds is ``tmap``, which sends an ordered pair of vectors
(v, w) to [v.w, v x w]; two pairs are equivalent when they share both
products, and all higher constructions in this package act on those
equivalence classes through explicit representatives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ZeroQuaternion

Vec3 = tuple[float, float, float]

E1: Vec3 = (1.0, 0.0, 0.0)
E2: Vec3 = (0.0, 1.0, 0.0)
E3: Vec3 = (0.0, 0.0, 1.0)
ZERO3: Vec3 = (0.0, 0.0, 0.0)

#: |norm^2 - 1| tolerance for unit-length preconditions.
UNIT_TOL = 1e-9


def vec3(x: float, y: float, z: float) -> Vec3:
    return (float(x), float(y), float(z))


def add(a: Vec3, b: Vec3) -> Vec3:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def sub(a: Vec3, b: Vec3) -> Vec3:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def scale(c: float, v: Vec3) -> Vec3:
    return (c * v[0], c * v[1], c * v[2])


def neg(v: Vec3) -> Vec3:
    return (-v[0], -v[1], -v[2])


def dot(a: Vec3, b: Vec3) -> float:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def cross(a: Vec3, b: Vec3) -> Vec3:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def norm_sq(v: Vec3) -> float:
    return dot(v, v)


def norm(v: Vec3) -> float:
    return math.sqrt(dot(v, v))


def normalize(v: Vec3) -> Vec3:
    n = norm(v)
    if n == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return (v[0] / n, v[1] / n, v[2] / n)


def is_unit(v: Vec3, tol: float = UNIT_TOL) -> bool:
    return abs(norm_sq(v) - 1.0) <= tol


def max_abs(v: Vec3) -> float:
    return max(abs(v[0]), abs(v[1]), abs(v[2]))


@dataclass(frozen=True, slots=True)
class Quaternion:
    """Scalar part ``s`` and vector part ``v``; an element of R x R^3."""

    s: float
    v: Vec3


@dataclass(frozen=True, slots=True)
class VectorPair:
    """Ordered pair of 3-vectors, a representative of its equivalence class."""

    first: Vec3
    second: Vec3


QUAT_ONE = Quaternion(1.0, ZERO3)
QUAT_I = Quaternion(0.0, E1)
QUAT_J = Quaternion(0.0, E2)
QUAT_K = Quaternion(0.0, E3)


def tmap(p: VectorPair) -> Quaternion:
    """Map a vector pair to the quaternion [first.second, first x second].

    Bilinear in each slot; the squared quaternion norm equals the product
    of the squared vector lengths.
    """
    return Quaternion(dot(p.first, p.second), cross(p.first, p.second))


def swap(p: VectorPair) -> VectorPair:
    """Reverse the pair; its image under tmap is the conjugate quaternion."""
    return VectorPair(p.second, p.first)


def pair_is_degenerate(p: VectorPair) -> bool:
    """True when the pair represents the zero class (either vector is zero)."""
    q = tmap(p)
    return q.s == 0.0 and q.v == ZERO3 and (norm_sq(p.first) == 0.0 or norm_sq(p.second) == 0.0)


def pairs_equivalent(p1: VectorPair, p2: VectorPair, tol: float) -> bool:
    """Whether two pairs share dot and cross products within ``tol``.

    The tolerance is absolute but scaled by max(1, product of the vector
    magnitudes of either pair), so integer-valued inputs compare exactly
    at tol=0 while large inputs are judged relatively.
    """
    if tol < 0.0:
        raise ValueError("tol must be nonnegative")
    q1 = tmap(p1)
    q2 = tmap(p2)
    mag = max(
        1.0,
        norm(p1.first) * norm(p1.second),
        norm(p2.first) * norm(p2.second),
    )
    bound = tol * mag
    return abs(q1.s - q2.s) <= bound and max_abs(sub(q1.v, q2.v)) <= bound


def quat_mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product a*b (a is the left operand).

    scalar: a.s b.s - a.v . b.v
    vector: b.s a.v + a.s b.v + a.v x b.v
    The norm is multiplicative and the product is associative but not
    commutative (i*j = k = -j*i).
    """
    s = a.s * b.s - dot(a.v, b.v)
    v = add(add(scale(b.s, a.v), scale(a.s, b.v)), cross(a.v, b.v))
    return Quaternion(s, v)


def quat_conjugate(a: Quaternion) -> Quaternion:
    """Negate the vector part; for the image of (v, w) this is the image of (w, v)."""
    return Quaternion(a.s, neg(a.v))


def quat_neg(a: Quaternion) -> Quaternion:
    return Quaternion(-a.s, neg(a.v))


def quat_add(a: Quaternion, b: Quaternion) -> Quaternion:
    return Quaternion(a.s + b.s, add(a.v, b.v))


def quat_scale(c: float, a: Quaternion) -> Quaternion:
    return Quaternion(c * a.s, scale(c, a.v))


def quat_dot(a: Quaternion, b: Quaternion) -> float:
    """Euclidean inner product in R^4."""
    return a.s * b.s + dot(a.v, b.v)


def quat_norm_sq(a: Quaternion) -> float:
    return a.s * a.s + norm_sq(a.v)


def quat_norm(a: Quaternion) -> float:
    return math.sqrt(quat_norm_sq(a))


def quat_is_zero(a: Quaternion) -> bool:
    return quat_norm_sq(a) == 0.0


def quat_normalize(a: Quaternion) -> Quaternion:
    n = quat_norm(a)
    if n == 0.0:
        raise ZeroQuaternion("cannot normalize the zero quaternion")
    return Quaternion(a.s / n, (a.v[0] / n, a.v[1] / n, a.v[2] / n))


def quat_is_unit(a: Quaternion, tol: float = UNIT_TOL) -> bool:
    return abs(quat_norm_sq(a) - 1.0) <= tol


def quat_distance(a: Quaternion, b: Quaternion) -> float:
    """Euclidean distance in R^4."""
    d = sub(a.v, b.v)
    e = a.s - b.s
    return math.sqrt(e * e + dot(d, d))


def identity_residuals(a: Vec3, b: Vec3, c: Vec3) -> tuple[float, Vec3]:
    """Left-minus-right residuals of the two three-vector product identities

        (a.c)(b.b)   = (a.b)(b.c) - (a x b).(b x c)
        (a x c)(b.b) = (a.b)(b x c) + (b.c)(a x b) + (b x c) x (a x b)

    Both vanish identically; the returned values measure only floating
    point roundoff. They encode the quaternion product: with q = tmap(a, b)
    and q' = tmap(b, c) scaled to unit middle vector, the right-hand sides
    are the scalar and vector parts of q' q.
    """
    ab = dot(a, b)
    bc = dot(b, c)
    ac = dot(a, c)
    bb = dot(b, b)
    axb = cross(a, b)
    bxc = cross(b, c)
    r_scalar = ac * bb - (ab * bc - dot(axb, bxc))
    lhs_vec = scale(bb, cross(a, c))
    rhs_vec = add(add(scale(ab, bxc), scale(bc, axb)), cross(bxc, axb))
    return r_scalar, sub(lhs_vec, rhs_vec)


def lbc_both_sides(a: Vec3, b: Vec3, c: Vec3, d: Vec3) -> tuple[float, float]:
    """Both sides of the Lagrange-Binet-Cauchy identity

        (a x b).(c x d) = (a.c)(b.d) - (a.d)(b.c)

    evaluated independently so tests can compare them.
    """
    lhs = dot(cross(a, b), cross(c, d))
    rhs = dot(a, c) * dot(b, d) - dot(a, d) * dot(b, c)
    return lhs, rhs
