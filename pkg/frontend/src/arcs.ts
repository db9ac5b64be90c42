/**
 * Oriented great-circle arcs for the slide-rule view.
 *
 * An arc is an ordered pair of unit endpoints; composing two arcs means
 * asking the service to merge the pairs. The response carries the merged
 * pair, its quaternion, and the shared endpoint the merge ran through, so
 * the matched configuration (right arc sliding until it meets the left
 * one) renders straight from service data.
 */

import type { Vec3 } from "./quat.js";
import type { Quat } from "./quat.js";
import { vadd, vdot, vnorm, vnormalize, vscale } from "./vec.js";
import type { MergeResponse } from "./api.js";

export interface ArcSpec {
  readonly start: Vec3;
  readonly end: Vec3;
}

const UNIT_TOL = 1e-6;
const ANTIPODAL_TOL = 1e-9;

/** Reason the arc is unusable, or null when it is fine. */
export function arcProblem(arc: ArcSpec): string | null {
  if (Math.abs(vnorm(arc.start) - 1) > UNIT_TOL) return "start is not a unit vector";
  if (Math.abs(vnorm(arc.end) - 1) > UNIT_TOL) return "end is not a unit vector";
  if (vdot(arc.start, arc.end) <= -1 + ANTIPODAL_TOL) return "endpoints are antipodal";
  return null;
}

/**
 * Polyline along the arc for rendering: normalized chord interpolation,
 * which traces the same great circle as the exact geodesic.
 */
export function arcPoints(arc: ArcSpec, segments = 32): Vec3[] {
  const points: Vec3[] = [];
  for (let i = 0; i <= segments; i++) {
    const t = i / segments;
    points.push(vnormalize(vadd(vscale(1 - t, arc.start), vscale(t, arc.end))));
  }
  return points;
}

export interface MatchedArcs {
  /** Arc of the composed class: outer endpoints of the joined arcs. */
  merged: ArcSpec;
  /** The shared endpoint both operands were slid onto. */
  sharedPoint: Vec3;
  /** Right operand re-represented to end at the shared point. */
  matchedRight: ArcSpec;
  /** Left operand re-represented to start at the shared point. */
  matchedLeft: ArcSpec;
  quaternion: Quat;
}

export function matchedConfiguration(response: MergeResponse): MatchedArcs {
  const [start, end] = response.pair;
  return {
    merged: { start, end },
    sharedPoint: response.overlap,
    matchedRight: { start, end: response.overlap },
    matchedLeft: { start: response.overlap, end },
    quaternion: response.quaternion,
  };
}
