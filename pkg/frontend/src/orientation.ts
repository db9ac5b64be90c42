/**
 * Orientation state driven by trackball drags.
 *
 * Each completed drag asks the service for the rotation carrying the
 * anchor to the release point; the response carries both the half-angle
 * quaternion (composed here with a plain Hamilton product, then
 * renormalized) and the rotation matrix (composed for rendering). The
 * quaternion history is kept so sessions can be replayed or checked
 * against the service's own folded product.
 */

import type { Quat } from "./quat.js";
import { QUAT_IDENTITY, hamilton, quatNormalize } from "./quat.js";
import type { Mat3 } from "./vec.js";
import { MAT3_IDENTITY, mat3Mul } from "./vec.js";
import type { TrackballResponse } from "./api.js";

export class OrientationState {
  quaternion: Quat = QUAT_IDENTITY;
  matrix: Mat3 = MAT3_IDENTITY;
  readonly history: Quat[] = [];
  private issued = 0;

  /** Token for a new request; responses for older tokens are stale. */
  beginDrag(): number {
    return ++this.issued;
  }

  /**
   * Compose a drag response issued under `token`. Returns false (and
   * leaves the state untouched) when a newer drag has been issued since.
   */
  applyDrag(result: TrackballResponse, token: number): boolean {
    if (token !== this.issued) return false;
    this.quaternion = quatNormalize(hamilton(result.quaternion, this.quaternion));
    this.matrix = mat3Mul(result.matrix, this.matrix);
    this.history.push(result.quaternion);
    return true;
  }

  reset(): void {
    this.quaternion = QUAT_IDENTITY;
    this.matrix = MAT3_IDENTITY;
    this.history.length = 0;
    this.issued++;
  }
}
