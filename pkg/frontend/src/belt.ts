/**
 * Belt-trick explorer data: one fetch of the full homotopy grid, then
 * row selection by the slider value. At the final homotopy time the loop
 * has collapsed to the single point e1.
 */

import type { BeltFrame } from "./api.js";
import { vdist } from "./vec.js";

export interface BeltRow {
  t: number;
  frames: BeltFrame[];
}

const COLLAPSE_TOL = 1e-9;

export class BeltData {
  readonly rows: BeltRow[];

  constructor(frames: BeltFrame[]) {
    const byT = new Map<number, BeltFrame[]>();
    for (const frame of frames) {
      const bucket = byT.get(frame.t);
      if (bucket) bucket.push(frame);
      else byT.set(frame.t, [frame]);
    }
    this.rows = [...byT.entries()]
      .map(([t, rowFrames]) => ({ t, frames: rowFrames }))
      .sort((a, b) => a.t - b.t);
    if (this.rows.length === 0) throw new Error("no belt frames");
  }

  get tMax(): number {
    return this.rows[this.rows.length - 1]!.t;
  }

  rowNearest(t: number): BeltRow {
    let best = this.rows[0]!;
    for (const row of this.rows) {
      if (Math.abs(row.t - t) < Math.abs(best.t - t)) best = row;
    }
    return best;
  }

  /** True when every loop point of the row coincides (a single point). */
  static isCollapsed(row: BeltRow): boolean {
    const first = row.frames[0];
    if (!first) return false;
    return row.frames.every((f) => vdist(f.e, first.e) <= COLLAPSE_TOL);
  }
}
