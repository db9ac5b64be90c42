"""Rotation algebra built from ordered pairs of 3-vectors.

Quaternions arise here as equivalence classes of vector pairs sharing
their dot and cross products. The package provides the pair-to-quaternion
map and its algebra, explicit class representatives and the geometric
merge composition, the reflection double cover onto rotations, sphere
level slerp, square-root-free vector alignment in any dimension, the
belt-trick homotopy, and a CLI plus HTTP service exposing it all.

Every operation is a pure function over immutable values (tuples and
frozen dataclasses), so all of it is safe to call concurrently from any
number of threads; the HTTP layer serves requests concurrently on top of
exactly that property.
"""

from .belt import BeltFrame, belt_frames, belt_point, belt_quaternion, belt_rotation
from .core import (
    E1,
    E2,
    E3,
    QUAT_I,
    QUAT_J,
    QUAT_K,
    QUAT_ONE,
    Quaternion,
    Vec3,
    VectorPair,
    identity_residuals,
    lbc_both_sides,
    pairs_equivalent,
    quat_conjugate,
    quat_mul,
    quat_norm,
    quat_normalize,
    swap,
    tmap,
)
from .errors import (
    AntipodalInputs,
    AntipodalQuaternions,
    DegeneratePair,
    DimensionMismatch,
    InvalidGrid,
    MalformedInput,
    NonUnitQuaternion,
    NonUnitVector,
    NotOrthogonal,
    PairQuatError,
    ZeroQuaternion,
)
from .interpolation import SlerpCoefficients, slerp_coefficients, slerp_s2, slerp_s3
from .pairs import OverlapChoice, linear_combine, merge, overlap_unit, rep_with_first, rep_with_second
from .rotations import (
    align_matrix,
    align_matrix_3d,
    conjugate_vector,
    cross_matrix,
    euler_rodrigues,
    reflect_line,
    reflect_line_matrix,
    rotation_angle,
    rotation_from_pair,
    transvection_apply_inverse,
)

__version__ = "0.1.0"

__all__ = [
    "AntipodalInputs",
    "AntipodalQuaternions",
    "BeltFrame",
    "DegeneratePair",
    "DimensionMismatch",
    "E1",
    "E2",
    "E3",
    "InvalidGrid",
    "MalformedInput",
    "NonUnitQuaternion",
    "NonUnitVector",
    "NotOrthogonal",
    "OverlapChoice",
    "PairQuatError",
    "QUAT_I",
    "QUAT_J",
    "QUAT_K",
    "QUAT_ONE",
    "Quaternion",
    "SlerpCoefficients",
    "Vec3",
    "VectorPair",
    "ZeroQuaternion",
    "align_matrix",
    "align_matrix_3d",
    "belt_frames",
    "belt_point",
    "belt_quaternion",
    "belt_rotation",
    "conjugate_vector",
    "cross_matrix",
    "euler_rodrigues",
    "identity_residuals",
    "lbc_both_sides",
    "linear_combine",
    "merge",
    "overlap_unit",
    "pairs_equivalent",
    "quat_conjugate",
    "quat_mul",
    "quat_norm",
    "quat_normalize",
    "reflect_line",
    "reflect_line_matrix",
    "rep_with_first",
    "rep_with_second",
    "rotation_angle",
    "rotation_from_pair",
    "slerp_coefficients",
    "slerp_s2",
    "slerp_s3",
    "swap",
    "tmap",
    "transvection_apply_inverse",
]
