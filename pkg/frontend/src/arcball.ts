/**
 * Screen-to-sphere projection for the trackball.
 *
 * Pointer coordinates map onto the visible hemisphere (z toward the
 * viewer); points beyond the silhouette clamp onto the rim circle, so the
 * result is always exactly unit length and drags can never produce an
 * invalid sphere point.
 */

import type { Vec3 } from "./quat.js";

export function pointerToSphere(
  px: number,
  py: number,
  width: number,
  height: number,
): Vec3 {
  const radius = Math.min(width, height) / 2;
  const x = (px - width / 2) / radius;
  const y = (height / 2 - py) / radius; // screen y grows downward
  const rr = x * x + y * y;
  if (rr > 1) {
    const r = Math.sqrt(rr);
    return [x / r, y / r, 0];
  }
  return [x, y, Math.sqrt(1 - rr)];
}
