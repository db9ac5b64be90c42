"""Explicit class representatives, overlap vectors, and geometric composition.

Any two nonzero classes admit representatives with a shared endpoint: a
unit vector orthogonal to both vector parts. ``merge`` exploits that to
compose classes by joining arcs end to end, which realizes the quaternion
product without ever forming it; ``linear_combine`` does the same for the
additive structure by sharing the first element instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    E1,
    Quaternion,
    Vec3,
    VectorPair,
    add,
    cross,
    dot,
    norm,
    normalize,
    norm_sq,
    quat_is_zero,
    scale,
    sub,
    tmap,
    UNIT_TOL,
)
from .errors import DegeneratePair, NonUnitVector, NotOrthogonal, ZeroQuaternion

#: ||a.v x b.v|| <= PARALLEL_TOL * ||a.v|| * ||b.v|| switches overlap_unit
#: to its deterministic fallback. Far above roundoff, far below any
#: geometrically meaningful angle.
PARALLEL_TOL = 1e-9

#: Orthogonality precondition for representative constructions. Looser than
#: the unit tolerance because an overlap vector computed from a nearly
#: parallel cross product can carry up to ~1e-7 of residual non-orthogonality
#: while still round-tripping fine.
ORTHO_TOL = 1e-6


@dataclass(frozen=True, slots=True)
class OverlapChoice:
    """A unit vector usable as the shared endpoint of two classes.

    ``degenerate`` is set when the vector parts were parallel or zero and
    the deterministic fallback was used.
    """

    u: Vec3
    degenerate: bool


def _require_unit(u: Vec3, name: str) -> None:
    if abs(norm_sq(u) - 1.0) > UNIT_TOL:
        raise NonUnitVector(f"{name} must be a unit vector, got |{name}|^2 = {norm_sq(u)!r}")


def _require_orthogonal(u: Vec3, qv: Vec3) -> None:
    if abs(dot(u, qv)) > ORTHO_TOL * max(1.0, norm(qv)):
        raise NotOrthogonal(f"u must be orthogonal to the vector part, got u.v = {dot(u, qv)!r}")


def _require_nonzero(q: Quaternion, name: str = "q") -> None:
    if quat_is_zero(q):
        raise ZeroQuaternion(f"{name} must be nonzero")


def rep_with_second(q: Quaternion, u: Vec3) -> VectorPair:
    """Representative (v, u) of the class of ``q`` with prescribed second element.

    Requires unit ``u`` orthogonal to the vector part of ``q``. The closed
    form v = s u + u x q.v needs no trigonometry and gives |v| = |q|.
    """
    _require_nonzero(q)
    _require_unit(u, "u")
    _require_orthogonal(u, q.v)
    v = add(scale(q.s, u), cross(u, q.v))
    return VectorPair(v, u)


def rep_with_first(q: Quaternion, u: Vec3) -> VectorPair:
    """Representative (u, w) of the class of ``q`` with prescribed first element.

    Mirror of ``rep_with_second``: w = s u - u x q.v, so |w| = |q|.
    """
    _require_nonzero(q)
    _require_unit(u, "u")
    _require_orthogonal(u, q.v)
    w = sub(scale(q.s, u), cross(u, q.v))
    return VectorPair(u, w)


def _fallback_orthogonal(base: Vec3) -> Vec3:
    # Coordinate axis with the smallest absolute component, orthogonalized
    # against base. Deterministic so merge results are reproducible.
    n = normalize(base)
    comps = (abs(n[0]), abs(n[1]), abs(n[2]))
    idx = comps.index(min(comps))
    axis = (E1, (0.0, 1.0, 0.0), (0.0, 0.0, 1.0))[idx]
    return normalize(sub(axis, scale(dot(axis, n), n)))


def overlap_unit(a: Quaternion, b: Quaternion) -> OverlapChoice:
    """Unit vector orthogonal to both vector parts, usable as shared endpoint.

    Normalizes a.v x b.v when the parts span a plane; otherwise falls back
    to a deterministic axis orthogonal to whichever part is nonzero (or e1
    when both vanish) and flags the choice as degenerate.
    """
    _require_nonzero(a, "a")
    _require_nonzero(b, "b")
    c = cross(a.v, b.v)
    na = norm(a.v)
    nb = norm(b.v)
    if norm(c) > PARALLEL_TOL * na * nb:
        return OverlapChoice(normalize(c), False)
    if na > 0.0:
        return OverlapChoice(_fallback_orthogonal(a.v), True)
    if nb > 0.0:
        return OverlapChoice(_fallback_orthogonal(b.v), True)
    return OverlapChoice(E1, True)


def merge(left: VectorPair, right: VectorPair) -> VectorPair:
    """Compose two classes by joining representatives at a shared endpoint.

    Picks an overlap unit u, rewrites ``right`` as (v, u) and ``left`` as
    (u, w), and returns (v, w). The image under tmap equals
    quat_mul(tmap(left), tmap(right)); that homomorphism property is what
    certifies the geometry, and the test suite asserts it densely.
    """
    a = tmap(left)
    b = tmap(right)
    if quat_is_zero(a) or quat_is_zero(b):
        raise DegeneratePair("cannot merge a pair representing the zero class")
    u = overlap_unit(a, b).u
    tail = rep_with_second(b, u)
    head = rep_with_first(a, u)
    return VectorPair(tail.first, head.second)


def linear_combine(a: Quaternion, b: Quaternion, ca: float, cb: float) -> Quaternion:
    """ca*a + cb*b computed geometrically through a shared first element.

    Builds representatives (u, w) and (u, w') and returns
    tmap(u, ca w + cb w'), which equals the componentwise combination by
    bilinearity.
    """
    _require_nonzero(a, "a")
    _require_nonzero(b, "b")
    u = overlap_unit(a, b).u
    w = rep_with_first(a, u).second
    w2 = rep_with_first(b, u).second
    return tmap(VectorPair(u, add(scale(ca, w), scale(cb, w2))))
