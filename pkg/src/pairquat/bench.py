"""Timing and operation-count reports for the small rotation kernels.

Which to trust: the multiplication/division counts are hard facts from the
instrumented scalar type and are asserted in the test suite; wall-clock
numbers are medians of batched monotonic-clock timings and are reported
only, never asserted.
"""

from __future__ import annotations

import hashlib
import statistics
import struct
import time
from dataclasses import dataclass

from .core import Quaternion, VectorPair, add, dot, norm, quat_mul, scale, tmap
from .instrument import counted_inputs
from .rotations import (
    align_matrix,
    align_matrix_3d,
    euler_rodrigues,
    rotation_from_pair,
    transvection_apply_inverse,
)
from .sampling import random_unit_quaternion, random_unit_vector
import random


@dataclass(frozen=True)
class BenchConfig:
    seed: int = 0
    iterations: int = 20000
    batches: int = 5
    checksum_samples: int = 128


@dataclass(frozen=True)
class BenchReport:
    kernel: str
    iterations: int
    ns_per_op: float
    mul_count: int | None
    div_count: int | None
    sqrt_count: int | None
    checksum: str

    def as_json(self) -> dict:
        return {
            "kernel": self.kernel,
            "iterations": self.iterations,
            "ns_per_op": self.ns_per_op,
            "mul_count": self.mul_count,
            "div_count": self.div_count,
            "sqrt_count": self.sqrt_count,
            "checksum": self.checksum,
        }


def _flatten(value) -> list[float]:
    if isinstance(value, Quaternion):
        return [value.s, *value.v]
    if isinstance(value, (int, float)):
        return [float(value)]
    try:
        out: list[float] = []
        for item in value:
            out.extend(_flatten(item))
        return out
    except TypeError:
        return [float(value)]


def _checksum(outputs) -> str:
    digest = hashlib.sha256()
    for value in outputs:
        for x in _flatten(value):
            digest.update(struct.pack("<d", x))
    return digest.hexdigest()[:16]


def _make_inputs(seed: int, count: int):
    """One seeded input stream shared by every kernel."""
    rng = random.Random(seed)
    samples = []
    while len(samples) < count:
        u_i = random_unit_vector(rng)
        u_f = random_unit_vector(rng)
        if 1.0 + dot(u_i, u_f) <= 1e-6:
            continue
        e = random_unit_vector(rng)
        qa = random_unit_quaternion(rng)
        qb = random_unit_quaternion(rng)
        samples.append((u_i, u_f, e, qa, qb))
    return samples


def _half_angle_rotation(u_i, u_f):
    mid = scale(1.0 / norm(add(u_i, u_f)), add(u_i, u_f))
    return euler_rodrigues(tmap(VectorPair(u_i, mid)))


def count_align_kernel_ops():
    """Exact multiplication/division/root counts of the 3D align kernel."""
    counter, (u_i, u_f) = counted_inputs((1.0, 0.0, 0.0), (0.0, 1.0, 0.0))
    align_matrix_3d(u_i, u_f)
    return counter


def bench_kernels(seed: int = 0, iterations: int = 20000, config: BenchConfig | None = None) -> list[BenchReport]:
    cfg = config or BenchConfig(seed=seed, iterations=iterations)
    if cfg.iterations < 1:
        raise ValueError("iterations must be >= 1")
    samples = _make_inputs(cfg.seed, cfg.checksum_samples)
    n = len(samples)

    kernels = [
        ("align3-specialized", lambda smp: align_matrix_3d(smp[0], smp[1])),
        ("align3-generic", lambda smp: align_matrix(smp[0], smp[1])),
        ("halfangle-euler-rodrigues", lambda smp: _half_angle_rotation(smp[0], smp[1])),
        ("transvection-apply", lambda smp: transvection_apply_inverse(smp[0], smp[1], smp[2])),
        ("quat-mul", lambda smp: quat_mul(smp[3], smp[4])),
        ("rotation-from-pair", lambda smp: rotation_from_pair(smp[0], smp[2])),
    ]

    counts = count_align_kernel_ops()
    reports = []
    for name, fn in kernels:
        # Checksum over the fixed sample block: independent of iteration count.
        checksum = _checksum(fn(s) for s in samples)
        per_batch = []
        batch = max(1, cfg.iterations // cfg.batches)
        fn(samples[0])  # warm up
        for _ in range(cfg.batches):
            start = time.perf_counter_ns()
            for i in range(batch):
                fn(samples[i % n])
            per_batch.append((time.perf_counter_ns() - start) / batch)
        instrumented = name == "align3-specialized"
        reports.append(
            BenchReport(
                kernel=name,
                iterations=batch * cfg.batches,
                ns_per_op=statistics.median(per_batch),
                mul_count=counts.mul if instrumented else None,
                div_count=counts.div if instrumented else None,
                sqrt_count=counts.sqrt if instrumented else None,
                checksum=checksum,
            )
        )
    return reports
