"""Rotations from reflections: the double cover, matrix forms, and alignment.

A unit pair (v, w) acts on 3-space as the composition of two line
reflections, first across v then across w, which rotates by twice the
angle between them about v x w. Negating either vector leaves the map
unchanged, so unit quaternions cover rotations two to one. The alignment
construction carries one unit vector onto another without trigonometry or
square roots, in any dimension.
"""

from __future__ import annotations

import math

import numpy as np

from .core import (
    Quaternion,
    Vec3,
    add,
    dot,
    norm_sq,
    quat_conjugate,
    quat_mul,
    quat_norm,
    scale,
    sub,
    UNIT_TOL,
)
from .errors import AntipodalInputs, DimensionMismatch, NonUnitQuaternion, NonUnitVector

Matrix3 = tuple[tuple[float, float, float], tuple[float, float, float], tuple[float, float, float]]

MAT3_IDENTITY: Matrix3 = ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0))

#: s.s at or below this rejects alignment inputs as antipodal; the formula
#: divides by s.s and no unique aligning rotation exists at the antipode.
ANTIPODAL_SS_TOL = 1e-12


def _require_unit_vec(u: Vec3, name: str) -> None:
    if abs(norm_sq(u) - 1.0) > UNIT_TOL:
        raise NonUnitVector(f"{name} must be a unit vector, got |{name}|^2 = {norm_sq(u)!r}")


def _require_unit_quat(q: Quaternion) -> None:
    if abs(quat_norm(q) - 1.0) > UNIT_TOL:
        raise NonUnitQuaternion(f"expected a unit quaternion, got norm {quat_norm(q)!r}")


def mat3_apply(m: Matrix3, x: Vec3) -> Vec3:
    return (
        m[0][0] * x[0] + m[0][1] * x[1] + m[0][2] * x[2],
        m[1][0] * x[0] + m[1][1] * x[1] + m[1][2] * x[2],
        m[2][0] * x[0] + m[2][1] * x[1] + m[2][2] * x[2],
    )


def mat3_mul(a: Matrix3, b: Matrix3) -> Matrix3:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)) for i in range(3)
    )  # type: ignore[return-value]


def mat3_transpose(m: Matrix3) -> Matrix3:
    return tuple(tuple(m[j][i] for j in range(3)) for i in range(3))  # type: ignore[return-value]


def mat3_trace(m: Matrix3) -> float:
    return m[0][0] + m[1][1] + m[2][2]


def mat3_max_diff(a: Matrix3, b: Matrix3) -> float:
    return max(abs(a[i][j] - b[i][j]) for i in range(3) for j in range(3))


def cross_matrix(u: Vec3) -> Matrix3:
    """Skew matrix J with J x = u cross x."""
    return (
        (0.0, -u[2], u[1]),
        (u[2], 0.0, -u[0]),
        (-u[1], u[0], 0.0),
    )


def reflect_line(u: Vec3, x: Vec3) -> Vec3:
    """Reflect x across the line spanned by the unit vector u.

    Fixes u, negates the orthogonal complement, and is an involution.
    """
    _require_unit_vec(u, "u")
    return sub(scale(2.0 * dot(u, x), u), x)


def reflect_line_matrix(u: Vec3) -> Matrix3:
    """Matrix 2 u u^T - I of the line reflection across unit u."""
    _require_unit_vec(u, "u")
    return tuple(
        tuple(2.0 * u[i] * u[j] - (1.0 if i == j else 0.0) for j in range(3)) for i in range(3)
    )  # type: ignore[return-value]


def rotation_from_pair(v: Vec3, w: Vec3) -> Matrix3:
    """Rotation matrix of the composed line reflections x -> rho_w(rho_v(x)).

    For unit v, w this rotates by twice the angle between them about
    v x w; the sign of either input does not matter.
    """
    _require_unit_vec(v, "v")
    _require_unit_vec(w, "w")
    return mat3_mul(reflect_line_matrix(w), reflect_line_matrix(v))


def euler_rodrigues(q: Quaternion) -> Matrix3:
    """Rotation matrix I + 2 s J + 2 J^2 of a unit quaternion, J = cross_matrix(q.v)."""
    _require_unit_quat(q)
    j = cross_matrix(q.v)
    jj = mat3_mul(j, j)
    two_s = 2.0 * q.s
    return tuple(
        tuple(
            (1.0 if i == k else 0.0) + two_s * j[i][k] + 2.0 * jj[i][k] for k in range(3)
        )
        for i in range(3)
    )  # type: ignore[return-value]


def conjugate_vector(q: Quaternion, x: Vec3) -> Vec3:
    """Rotate x by the unit quaternion q via q [0, x] q*.

    The scalar part of the sandwich vanishes (up to roundoff) and the
    vector part equals euler_rodrigues(q) applied to x.
    """
    _require_unit_quat(q)
    return quat_mul(quat_mul(q, Quaternion(0.0, x)), quat_conjugate(q)).v


def rotation_angle(m: Matrix3) -> float:
    """Rotation angle in [0, pi] from the trace, clamped against roundoff."""
    c = (mat3_trace(m) - 1.0) / 2.0
    return math.acos(min(1.0, max(-1.0, c)))


def align_matrix(u_initial, u_final) -> np.ndarray:
    """Rotation carrying unit u_initial to unit u_final, valid in any dimension.

    With s = u_initial + u_final the matrix is

        I - (2 / s.s) s s^T + 2 u_final u_initial^T

    It is orthogonal with determinant +1, fixes the orthogonal complement
    of the span of the two inputs, and involves no square root. Antipodal
    inputs are rejected (s.s ~ 0 and the rotation is not unique there).
    """
    u_i = np.asarray(u_initial, dtype=float)
    u_f = np.asarray(u_final, dtype=float)
    if u_i.ndim != 1 or u_f.ndim != 1 or u_i.shape != u_f.shape:
        raise DimensionMismatch(f"expected two equal-length vectors, got {u_i.shape} and {u_f.shape}")
    n = u_i.shape[0]
    if n < 2:
        raise DimensionMismatch("alignment needs dimension >= 2")
    if abs(float(u_i @ u_i) - 1.0) > UNIT_TOL:
        raise NonUnitVector("u_initial must be a unit vector")
    if abs(float(u_f @ u_f) - 1.0) > UNIT_TOL:
        raise NonUnitVector("u_final must be a unit vector")
    s = u_i + u_f
    ss = float(s @ s)
    if ss <= ANTIPODAL_SS_TOL:
        raise AntipodalInputs("u_final is antipodal to u_initial")
    return np.eye(n) - (2.0 / ss) * np.outer(s, s) + 2.0 * np.outer(u_f, u_i)


# Threshold for align_matrix_3d, phrased on 1 + u_i.u_f = s.s / 2 so the
# kernel agrees with align_matrix about which inputs are antipodal.
_ANTIPODAL_HALF_TOL = ANTIPODAL_SS_TOL / 2.0


def align_matrix_3d(u_initial, u_final):
    """Specialized 3x3 alignment kernel: 18 multiplications, 1 division, no roots.

    Same rotation as ``align_matrix`` in dimension 3, rearranged around the
    cross product w = u_initial x u_final and c = u_initial . u_final:

        R = I + J_w + (1 / (1 + c)) (w w^T - (w.w) I)

    Cost breakdown: 6 multiplications for w, 3 for c, 3 to scale w by
    1/(1+c), 6 for the unique entries of the symmetric outer product; the
    diagonal reuses those entries through additions only. Doubling never
    occurs and the single division is 1/(1+c). Inputs are assumed unit;
    validation lives in the callers so the stated cost is a property of
    the kernel itself. Works on any scalar type supporting + - * / and
    comparison, which is how the operation count is audited.
    """
    a1, a2, a3 = u_initial
    b1, b2, b3 = u_final
    w1 = a2 * b3 - a3 * b2
    w2 = a3 * b1 - a1 * b3
    w3 = a1 * b2 - a2 * b1
    c = a1 * b1 + a2 * b2 + a3 * b3
    denom = 1.0 + c
    if denom <= _ANTIPODAL_HALF_TOL:
        raise AntipodalInputs("u_final is antipodal to u_initial")
    h = 1.0 / denom
    hw1 = h * w1
    hw2 = h * w2
    hw3 = h * w3
    t11 = hw1 * w1
    t12 = hw1 * w2
    t13 = hw1 * w3
    t22 = hw2 * w2
    t23 = hw2 * w3
    t33 = hw3 * w3
    return (
        (1.0 - (t22 + t33), t12 - w3, t13 + w2),
        (t12 + w3, 1.0 - (t11 + t33), t23 - w1),
        (t13 - w2, t23 + w1, 1.0 - (t11 + t22)),
    )


def transvection_apply_inverse(u_initial: Vec3, u_final: Vec3, e: Vec3) -> Vec3:
    """Apply the inverse alignment rotation to e as two reflections, no roots.

    Reflects e across u_final, then across s = u_initial + u_final using
    the division by s.s in place of normalization. Equals the transpose of
    ``align_matrix(u_initial, u_final)`` applied to e.
    """
    _require_unit_vec(u_initial, "u_initial")
    _require_unit_vec(u_final, "u_final")
    s = add(u_initial, u_final)
    ss = dot(s, s)
    if ss <= ANTIPODAL_SS_TOL:
        raise AntipodalInputs("u_final is antipodal to u_initial")
    y = sub(scale(2.0 * dot(u_final, e), u_final), e)
    return sub(scale(2.0 * dot(s, y) / ss, s), y)
