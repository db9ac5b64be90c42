/**
 * The only quaternion math this client performs: Hamilton composition and
 * renormalization. Everything else (rotations from drags, merged arcs,
 * interpolation, belt frames) comes from the service, which is the single
 * source of truth for the geometry.
 */

export type Vec3 = readonly [number, number, number];

export interface Quat {
  readonly s: number;
  readonly v: Vec3;
}

export const QUAT_IDENTITY: Quat = { s: 1, v: [0, 0, 0] };

/** Hamilton product with `a` on the left, matching the service convention. */
export function hamilton(a: Quat, b: Quat): Quat {
  const [ax, ay, az] = a.v;
  const [bx, by, bz] = b.v;
  return {
    s: a.s * b.s - (ax * bx + ay * by + az * bz),
    v: [
      b.s * ax + a.s * bx + (ay * bz - az * by),
      b.s * ay + a.s * by + (az * bx - ax * bz),
      b.s * az + a.s * bz + (ax * by - ay * bx),
    ],
  };
}

export function quatNorm(q: Quat): number {
  const [x, y, z] = q.v;
  return Math.sqrt(q.s * q.s + x * x + y * y + z * z);
}

/** Renormalize; drag sessions are unbounded so drift must be repaired. */
export function quatNormalize(q: Quat): Quat {
  const n = quatNorm(q);
  if (n === 0) throw new Error("cannot normalize a zero quaternion");
  return { s: q.s / n, v: [q.v[0] / n, q.v[1] / n, q.v[2] / n] };
}

/** Euclidean distance in R^4, used by tests and status readouts. */
export function quatDistance(a: Quat, b: Quat): number {
  const ds = a.s - b.s;
  const dx = a.v[0] - b.v[0];
  const dy = a.v[1] - b.v[1];
  const dz = a.v[2] - b.v[2];
  return Math.sqrt(ds * ds + dx * dx + dy * dy + dz * dz);
}

/** Rotation angle readout in radians: the turn is twice the half-angle. */
export function rotationAngleOf(q: Quat): number {
  const c = Math.min(1, Math.max(-1, Math.abs(q.s)));
  return 2 * Math.acos(c);
}
