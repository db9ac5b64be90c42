"""Command-line front end.

Exit codes: 0 success, 1 validation or usage error, 2 invariant failure
from ``check``. JSON outputs reuse the canonical serializer of the HTTP
service so the two paths are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import service
from .bench import bench_kernels
from .belt import belt_frames, frames_to_csv_lines
from .checks import run_all
from .errors import MalformedInput, PairQuatError
from .interpolation import slerp_path, slerp_s2, slerp_s3
from .jsonio import (
    dumps_canonical,
    loads_strict,
    parse_quat,
    parse_vecn,
    quat_to_json,
)
from .service import (
    belt_frame_json,
    align_response,
    merge_response,
    mul_response,
)


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; the contract here is 1.
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _emit(payload) -> None:
    sys.stdout.write(dumps_canonical(payload) + "\n")


def _json_arg(text: str):
    return loads_strict(text)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pairquat", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_mul = sub.add_parser("mul", help="Hamilton product of two quaternions")
    p_mul.add_argument("--a", required=True, help='quaternion JSON, e.g. {"s":0,"v":[1,0,0]}')
    p_mul.add_argument("--b", required=True, help="quaternion JSON")

    p_merge = sub.add_parser("merge", help="compose two vector pairs by arc merging")
    p_merge.add_argument("--left", required=True, help="pair JSON [[vx,vy,vz],[wx,wy,wz]]")
    p_merge.add_argument("--right", required=True, help="pair JSON")

    p_slerp = sub.add_parser("slerp", help="interpolate between unit quaternions")
    p_slerp.add_argument("--a", required=True)
    p_slerp.add_argument("--b", required=True)
    p_slerp.add_argument("--method", choices=("s2", "s3"), default="s3")
    group = p_slerp.add_mutually_exclusive_group()
    group.add_argument("--samples", type=int, default=None, help="emit N+1 samples for t in [0,1]")
    group.add_argument("--t", type=float, default=None, help="single evaluation point")

    p_align = sub.add_parser("align", help="rotation carrying one unit vector to another")
    p_align.add_argument("--ui", required=True, help="initial unit vector JSON array")
    p_align.add_argument("--uf", required=True, help="final unit vector JSON array")
    p_align.add_argument("--dim", type=int, default=None, help="expected dimension (validated)")

    p_belt = sub.add_parser("belt", help="sample the belt-trick homotopy grid")
    p_belt.add_argument("--ns", type=int, default=16)
    p_belt.add_argument("--nt", type=int, default=16)
    p_belt.add_argument("--format", choices=("csv", "json"), default="csv")

    p_check = sub.add_parser("check", help="run the invariant suite")
    p_check.add_argument("--iters", type=int, default=1000)
    p_check.add_argument("--seed", type=int, default=0)

    p_bench = sub.add_parser("bench", help="time the rotation kernels")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--iterations", type=int, default=20000)

    p_serve = sub.add_parser("serve", help="start the HTTP JSON service")
    p_serve.add_argument(
        "--port",
        type=int,
        default=int(os.environ.get("PAIRQUAT_PORT", service.DEFAULT_PORT)),
    )
    p_serve.add_argument("--host", default="127.0.0.1")

    return parser


def _cmd_mul(args) -> int:
    _emit(mul_response({"a": _json_arg(args.a), "b": _json_arg(args.b)}))
    return 0


def _cmd_merge(args) -> int:
    _emit(merge_response({"left": _json_arg(args.left), "right": _json_arg(args.right)}))
    return 0


def _cmd_slerp(args) -> int:
    a = parse_quat(_json_arg(args.a), "a")
    b = parse_quat(_json_arg(args.b), "b")
    if args.t is not None:
        if not 0.0 <= args.t <= 1.0:
            print(f"note: t={args.t} lies outside [0,1]; extrapolating", file=sys.stderr)
        fn = slerp_s2 if args.method == "s2" else slerp_s3
        _emit(quat_to_json(fn(a, b, args.t)))
        return 0
    samples = args.samples if args.samples is not None else 10
    path = slerp_path(a, b, samples, args.method)
    _emit({"method": args.method, "samples": [{"q": quat_to_json(q), "t": t + 0.0} for t, q in path]})
    return 0


def _cmd_align(args) -> int:
    u_i = parse_vecn(_json_arg(args.ui), "uI")
    u_f = parse_vecn(_json_arg(args.uf), "uF")
    if args.dim is not None and len(u_i) != args.dim:
        raise MalformedInput(f"--dim {args.dim} does not match input dimension {len(u_i)}")
    _emit(align_response({"uI": list(u_i), "uF": list(u_f)}))
    return 0


def _cmd_belt(args) -> int:
    frames = belt_frames(args.ns, args.nt)
    if args.format == "csv":
        for line in frames_to_csv_lines(frames):
            sys.stdout.write(line + "\n")
    else:
        _emit({"frames": [belt_frame_json(f) for f in frames]})
    return 0


def _cmd_check(args) -> int:
    results = run_all(seed=args.seed, iters=args.iters)
    failures = 0
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        relation = "<=" if res.kind == "max" else ">"
        print(f"{res.name:28s} value={res.value:12.5e}  required {relation} {res.bound:.1e}  {status}")
        failures += 0 if res.passed else 1
    if failures:
        print(f"{failures} invariant(s) failed")
        return 2
    print(f"all {len(results)} invariants passed (seed={args.seed}, iters={args.iters})")
    return 0


def _cmd_bench(args) -> int:
    for report in bench_kernels(seed=args.seed, iterations=args.iterations):
        _emit(report.as_json())
    return 0


def _cmd_serve(args) -> int:
    service.serve(port=args.port, host=args.host)
    return 0


_COMMANDS = {
    "mul": _cmd_mul,
    "merge": _cmd_merge,
    "slerp": _cmd_slerp,
    "align": _cmd_align,
    "belt": _cmd_belt,
    "check": _cmd_check,
    "bench": _cmd_bench,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except PairQuatError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except json.JSONDecodeError as exc:
        print(f"error: MalformedInput: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
