"""Spherical linear interpolation on unit quaternions, and the same path
computed entirely from 2-sphere data.

The sine-ratio coefficients depend only on the angle between the
endpoints. When two unit quaternions are represented as vector pairs
sharing their first element, the inner product of the quaternions equals
the inner product of the second elements, so the coefficients, and hence
the whole interpolant, can be evaluated on the pairs alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    Quaternion,
    VectorPair,
    add,
    dot,
    quat_add,
    quat_dot,
    quat_norm,
    quat_normalize,
    quat_scale,
    scale,
    tmap,
    UNIT_TOL,
)
from .errors import AntipodalQuaternions, NonUnitQuaternion
from .pairs import overlap_unit, rep_with_first

#: Below this angle the sine ratios degrade to 0/0; normalized linear
#: interpolation agrees with the exact path to second order there.
SMALL_ANGLE = 1e-6

#: Inner products at or below -1 + this margin are rejected as antipodal.
ANTIPODAL_MARGIN = 1e-9


@dataclass(frozen=True, slots=True)
class SlerpCoefficients:
    """Blend weights for one interpolation step at angle ``omega``."""

    c: float
    c_prime: float
    omega: float


def slerp_coefficients(omega: float, t: float) -> SlerpCoefficients:
    """Endpoint weights sin((1-t) w)/sin(w) and sin(t w)/sin(w).

    Falls back to the linear limit (1-t, t) below SMALL_ANGLE.
    """
    if omega < SMALL_ANGLE:
        return SlerpCoefficients(1.0 - t, t, omega)
    sin_omega = math.sin(omega)
    return SlerpCoefficients(
        math.sin((1.0 - t) * omega) / sin_omega,
        math.sin(t * omega) / sin_omega,
        omega,
    )


def _require_unit(q: Quaternion, name: str) -> None:
    if abs(quat_norm(q) - 1.0) > UNIT_TOL:
        raise NonUnitQuaternion(f"{name} must be a unit quaternion")


def _clamped_acos(x: float) -> float:
    return math.acos(min(1.0, max(-1.0, x)))


def slerp_s3(a: Quaternion, b: Quaternion, t: float) -> Quaternion:
    """Constant-speed great-circle interpolation between unit quaternions.

    t may leave [0, 1]; the formula extrapolates along the same geodesic.
    Antipodal endpoints are rejected since the geodesic is not unique.
    """
    _require_unit(a, "a")
    _require_unit(b, "b")
    d = quat_dot(a, b)
    if d <= -1.0 + ANTIPODAL_MARGIN:
        raise AntipodalQuaternions("endpoints are antipodal")
    co = slerp_coefficients(_clamped_acos(d), t)
    q = quat_add(quat_scale(co.c, a), quat_scale(co.c_prime, b))
    if co.omega < SMALL_ANGLE:
        return quat_normalize(q)
    return q


def slerp_s2(a: Quaternion, b: Quaternion, t: float) -> Quaternion:
    """Same interpolant as ``slerp_s3``, computed from 2-sphere data.

    Represents both endpoints as pairs (u, w), (u, w') over a shared unit
    first element, reads the angle off w . w', and maps the blended second
    element back through tmap.
    """
    _require_unit(a, "a")
    _require_unit(b, "b")
    u = overlap_unit(a, b).u
    w = rep_with_first(a, u).second
    w2 = rep_with_first(b, u).second
    d = dot(w, w2)
    if d <= -1.0 + ANTIPODAL_MARGIN:
        raise AntipodalQuaternions("endpoints are antipodal")
    co = slerp_coefficients(_clamped_acos(d), t)
    q = tmap(VectorPair(u, add(scale(co.c, w), scale(co.c_prime, w2))))
    if co.omega < SMALL_ANGLE:
        return quat_normalize(q)
    return q


def slerp_path(a: Quaternion, b: Quaternion, samples: int, method: str = "s3") -> list[tuple[float, Quaternion]]:
    """samples+1 interpolants at t = 0, 1/samples, ..., 1."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    fn = slerp_s2 if method == "s2" else slerp_s3
    return [(i / samples, fn(a, b, i / samples)) for i in range(samples + 1)]
