/** Rendering-side vector plumbing: projection, sampling, bookkeeping. */

import type { Vec3 } from "./quat.js";

export function vadd(a: Vec3, b: Vec3): Vec3 {
  return [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
}

export function vscale(c: number, v: Vec3): Vec3 {
  return [c * v[0], c * v[1], c * v[2]];
}

export function vdot(a: Vec3, b: Vec3): number {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

export function vnorm(v: Vec3): number {
  return Math.sqrt(vdot(v, v));
}

export function vnormalize(v: Vec3): Vec3 {
  const n = vnorm(v);
  if (n === 0) throw new Error("cannot normalize a zero vector");
  return [v[0] / n, v[1] / n, v[2] / n];
}

export function vdist(a: Vec3, b: Vec3): number {
  const dx = a[0] - b[0];
  const dy = a[1] - b[1];
  const dz = a[2] - b[2];
  return Math.sqrt(dx * dx + dy * dy + dz * dz);
}

export type Mat3 = readonly [Vec3, Vec3, Vec3];

export const MAT3_IDENTITY: Mat3 = [
  [1, 0, 0],
  [0, 1, 0],
  [0, 0, 1],
];

export function mat3Apply(m: Mat3, x: Vec3): Vec3 {
  return [
    m[0][0] * x[0] + m[0][1] * x[1] + m[0][2] * x[2],
    m[1][0] * x[0] + m[1][1] * x[1] + m[1][2] * x[2],
    m[2][0] * x[0] + m[2][1] * x[1] + m[2][2] * x[2],
  ];
}

/** Compose two service-provided rotation matrices (a applied after b). */
export function mat3Mul(a: Mat3, b: Mat3): Mat3 {
  const row = (i: number): Vec3 => [
    a[i]![0] * b[0][0] + a[i]![1] * b[1][0] + a[i]![2] * b[2][0],
    a[i]![0] * b[0][1] + a[i]![1] * b[1][1] + a[i]![2] * b[2][1],
    a[i]![0] * b[0][2] + a[i]![1] * b[1][2] + a[i]![2] * b[2][2],
  ];
  return [row(0), row(1), row(2)];
}
