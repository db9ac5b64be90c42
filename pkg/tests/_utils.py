"""Shared assertion helpers for the test suite."""

from pairquat.core import Quaternion, quat_distance, sub


def assert_vec_close(got, want, tol=1e-12):
    diff = max(abs(g - w) for g, w in zip(got, want))
    assert diff <= tol, f"vectors differ by {diff} > {tol}: {got} vs {want}"


def assert_quat_close(got: Quaternion, want: Quaternion, tol=1e-12):
    dist = quat_distance(got, want)
    assert dist <= tol, f"quaternions differ by {dist} > {tol}: {got} vs {want}"


def assert_mat_close(got, want, tol=1e-12):
    diff = max(
        abs(got[i][j] - want[i][j]) for i in range(len(want)) for j in range(len(want))
    )
    assert diff <= tol, f"matrices differ by {diff} > {tol}"


def vec_diff(a, b):
    d = sub(a, b)
    return max(abs(c) for c in d)
