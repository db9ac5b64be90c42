"""The belt-trick homotopy: a family of loops on the 2-sphere and the paths
of quaternions and rotations they induce.

At t = 0 the loop is a great circle through -e1 in the equatorial plane
and its rotation image winds twice about e3 as s runs a full turn; at
t = 2*pi the loop has shrunk to the single point e1 and the rotations sit
at the identity. The intermediate rows deform one into the other, which is
the usual demonstration that the double turn is contractible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import E1, Quaternion, Vec3, VectorPair, tmap
from .errors import InvalidGrid
from .rotations import Matrix3, rotation_from_pair

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True, slots=True)
class BeltFrame:
    """One sample: loop parameter s, homotopy parameter t, and the point,
    quaternion, and rotation there."""

    s: float
    t: float
    e: Vec3
    q: Quaternion
    r: Matrix3


def belt_point(s: float, t: float) -> Vec3:
    """Unit vector of the loop family at loop parameter s, homotopy time t.

    e(s, t) = sin(t/4) (sin(t/4) e1 + cos(t/4) e3)
            + cos(t/4) (cos(s) (-cos(t/4) e1 + sin(t/4) e3) + sin(s) e2)

    2*pi-periodic in s; e(s, 2*pi) = e1 for every s. Note the t = 0 loop
    is -cos(s) e1 + sin(s) e2, a half-turn phase off the bare equator
    parameterization, and the s = 0 meridian moves as
    -cos(t/2) e1 + sin(t/2) e3; both facts are pinned by regression tests.
    """
    quarter = 0.25 * t
    sa = math.sin(quarter)
    ca = math.cos(quarter)
    cs = math.cos(s)
    return (
        sa * sa - ca * ca * cs,
        ca * math.sin(s),
        sa * ca * (1.0 + cs),
    )


def belt_quaternion(s: float, t: float) -> Quaternion:
    """Unit quaternion of the pair (e1, e(s, t)); the identity for t = 2*pi."""
    return tmap(VectorPair(E1, belt_point(s, t)))


def belt_rotation(s: float, t: float) -> Matrix3:
    """Rotation of the pair (e1, e(s, t)).

    The t = 0 row is rotation about e3 by -2s, i.e. two full turns as s
    runs 0 to 2*pi; the t = 2*pi row is constant identity.
    """
    return rotation_from_pair(E1, belt_point(s, t))


def belt_frames(n_s: int, n_t: int) -> list[BeltFrame]:
    """Uniform (n_s+1) x (n_t+1) grid of frames over s, t in [0, 2*pi].

    Ordered with t outermost, s innermost. Needs at least one interval in
    each direction.
    """
    if not isinstance(n_s, int) or not isinstance(n_t, int) or n_s < 1 or n_t < 1:
        raise InvalidGrid(f"grid needs integer n_s >= 1 and n_t >= 1, got {n_s!r}, {n_t!r}")
    frames = []
    for j in range(n_t + 1):
        t = TWO_PI * j / n_t
        for i in range(n_s + 1):
            s = TWO_PI * i / n_s
            e = belt_point(s, t)
            frames.append(
                BeltFrame(s, t, e, tmap(VectorPair(E1, e)), rotation_from_pair(E1, e))
            )
    return frames


CSV_HEADER = "s,t,ex,ey,ez,qs,qx,qy,qz,r11,r12,r13,r21,r22,r23,r31,r32,r33"


def frames_to_csv_lines(frames: Iterable[BeltFrame]) -> Iterator[str]:
    """CSV rows (header first), one frame per line, full double precision."""
    yield CSV_HEADER
    for f in frames:
        cells = [f.s, f.t, *f.e, f.q.s, *f.q.v]
        for row in f.r:
            cells.extend(row)
        yield ",".join(repr(c) for c in cells)
