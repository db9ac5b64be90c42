"""Stateless JSON-over-HTTP front end for the library.

Every endpoint is a pure function of the request body, implemented by one
dispatch function that the CLI shares, so both produce identical bytes for
identical logical requests. Domain errors map to 400 with the exception
class name as the machine-readable code; there is no state, auth, or
session machinery because the only clients are the local UI and tests.
"""

from __future__ import annotations

from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Any
from urllib.parse import parse_qs, urlsplit

from .belt import belt_frames
from .core import (
    UNIT_TOL,
    VectorPair,
    add,
    norm,
    norm_sq,
    quat_mul,
    quat_normalize,
    scale,
    tmap,
)
from .errors import MalformedInput, NonUnitVector, PairQuatError
from .interpolation import slerp_s2, slerp_s3
from .jsonio import (
    dumps_canonical,
    loads_strict,
    matrix_to_json,
    pair_to_json,
    parse_pair,
    parse_quat,
    parse_vec3,
    parse_vecn,
    quat_to_json,
    vec_to_json,
)
from .pairs import merge, overlap_unit
from .rotations import align_matrix, align_matrix_3d

DEFAULT_PORT = 8000
_MAX_BODY = 1 << 20


def belt_frame_json(frame) -> dict[str, Any]:
    return {
        "s": frame.s + 0.0,
        "t": frame.t + 0.0,
        "e": vec_to_json(frame.e),
        "q": quat_to_json(frame.q),
        "r": matrix_to_json(frame.r),
    }


def mul_response(body: Any) -> dict[str, Any]:
    if not isinstance(body, dict):
        raise MalformedInput("expected an object with keys a and b")
    return quat_to_json(quat_mul(parse_quat(body.get("a"), "a"), parse_quat(body.get("b"), "b")))


def merge_response(body: Any) -> dict[str, Any]:
    """Merged pair, its quaternion, and the shared endpoint the merge used.

    The overlap vector lets a client draw the matched configuration
    (right arc ending at it, left arc starting at it) without doing any
    geometry of its own.
    """
    if not isinstance(body, dict):
        raise MalformedInput("expected an object with keys left and right")
    left = parse_pair(body.get("left"), "left")
    right = parse_pair(body.get("right"), "right")
    merged = merge(left, right)
    shared = overlap_unit(tmap(left), tmap(right)).u
    return {
        "pair": pair_to_json(merged),
        "quaternion": quat_to_json(tmap(merged)),
        "overlap": vec_to_json(shared),
    }


def align_response(body: Any) -> dict[str, Any]:
    if not isinstance(body, dict):
        raise MalformedInput("expected an object with keys uI and uF")
    u_i = parse_vecn(body.get("uI"), "uI")
    u_f = parse_vecn(body.get("uF"), "uF")
    return {"matrix": matrix_to_json(align_matrix(u_i, u_f).tolist())}


def trackball_response(body: Any) -> dict[str, Any]:
    """Alignment rotation plus its half-angle unit quaternion, so a client
    can keep composing orientations with plain Hamilton products."""
    if not isinstance(body, dict):
        raise MalformedInput("expected an object with keys uI and uF")
    u_i = parse_vec3(body.get("uI"), "uI")
    u_f = parse_vec3(body.get("uF"), "uF")
    for name, u in (("uI", u_i), ("uF", u_f)):
        if abs(norm_sq(u) - 1.0) > UNIT_TOL:
            raise NonUnitVector(f"{name} must be a unit vector")
    matrix = align_matrix_3d(u_i, u_f)
    mid = scale(1.0 / norm(add(u_i, u_f)), add(u_i, u_f))
    half = quat_normalize(tmap(VectorPair(u_i, mid)))
    return {"matrix": matrix_to_json(matrix), "quaternion": quat_to_json(half)}


def slerp_response(body: Any) -> dict[str, Any]:
    if not isinstance(body, dict):
        raise MalformedInput("expected an object with keys a, b, t")
    a = parse_quat(body.get("a"), "a")
    b = parse_quat(body.get("b"), "b")
    t = body.get("t")
    if isinstance(t, bool) or not isinstance(t, (int, float)):
        raise MalformedInput("t must be a number")
    method = body.get("method", "s3")
    if method not in ("s2", "s3"):
        raise MalformedInput('method must be "s2" or "s3"')
    fn = slerp_s2 if method == "s2" else slerp_s3
    return quat_to_json(fn(a, b, float(t)))


def belt_response(query: dict[str, list[str]]) -> dict[str, Any]:
    try:
        n_s = int(query.get("ns", ["16"])[0])
        n_t = int(query.get("nt", ["16"])[0])
    except ValueError as exc:
        raise MalformedInput("ns and nt must be integers") from exc
    return {"frames": [belt_frame_json(f) for f in belt_frames(n_s, n_t)]}


def dispatch(method: str, path: str, query: dict[str, list[str]], body: bytes) -> tuple[int, Any]:
    """Route one request; returns (status, JSON-serializable payload)."""
    try:
        if method == "GET" and path == "/api/health":
            return 200, {"ok": True}
        if method == "GET" and path == "/api/belt":
            return 200, belt_response(query)
        if method == "POST":
            handlers = {
                "/api/mul": mul_response,
                "/api/merge": merge_response,
                "/api/align": align_response,
                "/api/trackball": trackball_response,
                "/api/slerp": slerp_response,
            }
            handler = handlers.get(path)
            if handler is not None:
                return 200, handler(loads_strict(body))
        return 404, {"error": "NotFound", "detail": f"no route {method} {path}"}
    except PairQuatError as exc:
        return 400, {"error": type(exc).__name__, "detail": str(exc)}


class _Handler(BaseHTTPRequestHandler):
    server_version = "pairquat"

    def _run(self, method: str) -> None:
        split = urlsplit(self.path)
        length = int(self.headers.get("Content-Length") or 0)
        body = self.rfile.read(min(length, _MAX_BODY)) if length else b""
        status, payload = dispatch(method, split.path, parse_qs(split.query), body)
        encoded = (dumps_canonical(payload) + "\n").encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(encoded)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(encoded)

    def do_GET(self) -> None:  # noqa: N802 (http.server API)
        self._run("GET")

    def do_POST(self) -> None:  # noqa: N802
        self._run("POST")

    def do_OPTIONS(self) -> None:  # noqa: N802
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def log_message(self, fmt: str, *args) -> None:
        pass


def make_server(port: int = DEFAULT_PORT, host: str = "127.0.0.1") -> ThreadingHTTPServer:
    return ThreadingHTTPServer((host, port), _Handler)


def serve(port: int = DEFAULT_PORT, host: str = "127.0.0.1") -> None:
    server = make_server(port, host)
    actual = server.server_address[1]
    print(f"pairquat service listening on http://{host}:{actual}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
