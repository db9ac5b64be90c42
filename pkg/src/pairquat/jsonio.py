"""Canonical JSON forms shared by the CLI and the HTTP service.

Vectors serialize as [x, y, z], quaternions as {"s": ..., "v": [...]},
matrices as arrays of row arrays. One serializer produces every byte of
output in both front ends, so identical logical requests yield identical
bodies. Parsing rejects non-finite numbers up front; the math layer never
sees them.
"""

from __future__ import annotations

import json
import math
from typing import Any, Sequence

from .core import Quaternion, Vec3, VectorPair
from .errors import MalformedInput


def _clean(x: float) -> float:
    # Collapse -0.0 so equal values always print identically.
    return x + 0.0


def vec_to_json(v: Sequence[float]) -> list[float]:
    return [_clean(float(c)) for c in v]


def quat_to_json(q: Quaternion) -> dict[str, Any]:
    return {"s": _clean(q.s), "v": vec_to_json(q.v)}


def pair_to_json(p: VectorPair) -> list[list[float]]:
    return [vec_to_json(p.first), vec_to_json(p.second)]


def matrix_to_json(rows) -> list[list[float]]:
    return [vec_to_json(row) for row in rows]


def dumps_canonical(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=True)


def _reject_constant(name: str) -> float:
    raise MalformedInput(f"non-finite number {name!r} is not allowed")


def loads_strict(text: str | bytes) -> Any:
    try:
        return json.loads(text, parse_constant=_reject_constant)
    except MalformedInput:
        raise
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from exc


def _as_finite(x: Any, what: str) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise MalformedInput(f"{what} must be a number, got {x!r}")
    value = float(x)
    if not math.isfinite(value):
        raise MalformedInput(f"{what} must be finite, got {value!r}")
    return value


def parse_vec3(obj: Any, what: str = "vector") -> Vec3:
    if not isinstance(obj, (list, tuple)) or len(obj) != 3:
        raise MalformedInput(f"{what} must be a 3-element array, got {obj!r}")
    x, y, z = (_as_finite(c, f"{what} component") for c in obj)
    return (x, y, z)


def parse_vecn(obj: Any, what: str = "vector") -> tuple[float, ...]:
    if not isinstance(obj, (list, tuple)) or len(obj) < 2:
        raise MalformedInput(f"{what} must be an array of at least 2 numbers")
    return tuple(_as_finite(c, f"{what} component") for c in obj)


def parse_quat(obj: Any, what: str = "quaternion") -> Quaternion:
    if not isinstance(obj, dict) or set(obj.keys()) != {"s", "v"}:
        raise MalformedInput(f'{what} must be an object with exactly "s" and "v"')
    return Quaternion(_as_finite(obj["s"], f"{what} scalar"), parse_vec3(obj["v"], f"{what} vector part"))


def parse_pair(obj: Any, what: str = "pair") -> VectorPair:
    if not isinstance(obj, (list, tuple)) or len(obj) != 2:
        raise MalformedInput(f"{what} must be a 2-element array of vectors")
    return VectorPair(parse_vec3(obj[0], f"{what} first"), parse_vec3(obj[1], f"{what} second"))
