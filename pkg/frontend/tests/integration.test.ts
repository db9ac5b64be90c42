/**
 * End-to-end tests against a real pairquat service spawned for the run.
 * These cover the UI acceptance criteria: the quarter drag, client-side
 * composition of a recorded drag session, the slide-rule compose, and the
 * collapsed belt row.
 */

import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiError, PairquatClient } from "../src/api.js";
import { matchedConfiguration } from "../src/arcs.js";
import { BeltData } from "../src/belt.js";
import { OrientationState } from "../src/orientation.js";
import { hamilton, quatDistance, quatNorm, type Quat, type Vec3 } from "../src/quat.js";
import { vdist, vdot } from "../src/vec.js";
import { startService, type RunningService } from "./helpers/service.js";

const SQ2 = Math.sqrt(0.5);

let service: RunningService;
let client: PairquatClient;

beforeAll(async () => {
  service = await startService();
  client = new PairquatClient(service.url);
});

afterAll(() => {
  service.stop();
});

/** Deterministic PRNG so the drag session is reproducible. */
function mulberry32(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state + 0x6d2b79f5) | 0;
    let t = Math.imul(state ^ (state >>> 15), 1 | state);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

function randomUnit(rand: () => number): Vec3 {
  for (;;) {
    const v: Vec3 = [rand() * 2 - 1, rand() * 2 - 1, rand() * 2 - 1];
    const n = Math.sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (n > 0.1 && n <= 1) return [v[0] / n, v[1] / n, v[2] / n];
  }
}

describe("trackball drags", () => {
  it("quarter drag e1 -> e2 lands on the half-angle quaternion", async () => {
    const state = new OrientationState();
    const result = await client.trackball([1, 0, 0], [0, 1, 0]);
    expect(state.applyDrag(result, state.beginDrag())).toBe(true);
    const expected: Quat = { s: SQ2, v: [0, 0, SQ2] };
    expect(quatDistance(state.quaternion, expected)).toBeLessThan(1e-6);
  });

  it("zero-length drag composes the identity and changes nothing", async () => {
    const state = new OrientationState();
    const before = state.quaternion;
    const result = await client.trackball([0, 0, 1], [0, 0, 1]);
    state.applyDrag(result, state.beginDrag());
    expect(quatDistance(state.quaternion, before)).toBeLessThan(1e-12);
  });

  it("antipodal drag is rejected by the service and ignored by the state", async () => {
    const state = new OrientationState();
    await expect(client.trackball([1, 0, 0], [-1, 0, 0])).rejects.toMatchObject({
      code: "AntipodalInputs",
    });
    expect(state.history.length).toBe(0);
    expect(quatDistance(state.quaternion, { s: 1, v: [0, 0, 0] })).toBe(0);
  });

  it("twenty recorded drags match the service's folded product", async () => {
    const rand = mulberry32(20250811);
    const state = new OrientationState();
    for (let i = 0; i < 20; i++) {
      let anchor: Vec3;
      let release: Vec3;
      do {
        anchor = randomUnit(rand);
        release = randomUnit(rand);
      } while (1 + vdot(anchor, release) < 1e-3 || vdist(anchor, release) < 1e-6);
      const token = state.beginDrag();
      const result = await client.trackball(anchor, release);
      expect(state.applyDrag(result, token)).toBe(true);
    }
    expect(state.history.length).toBe(20);
    expect(Math.abs(quatNorm(state.quaternion) - 1)).toBeLessThan(1e-6);

    // Fold the recorded session through the service, newest on the left,
    // mirroring the client-side composition order.
    let folded = state.history[0]!;
    for (let i = 1; i < state.history.length; i++) {
      folded = await client.mul(state.history[i]!, folded);
    }
    expect(quatDistance(state.quaternion, folded)).toBeLessThan(1e-6);
  });

  it("two successive drags equal the single merged rotation", async () => {
    const first = await client.trackball([1, 0, 0], [0, 1, 0]);
    const second = await client.trackball([0, 1, 0], [0, 0, 1]);
    const state = new OrientationState();
    state.applyDrag(first, state.beginDrag());
    state.applyDrag(second, state.beginDrag());
    const merged = await client.mul(second.quaternion, first.quaternion);
    expect(quatDistance(state.quaternion, merged)).toBeLessThan(1e-6);
    // And locally: the Hamilton product agrees with the service's.
    expect(
      quatDistance(hamilton(second.quaternion, first.quaternion), merged),
    ).toBeLessThan(1e-12);
  });
});

describe("slide rule", () => {
  const identityArc: [Vec3, Vec3] = [
    [1, 0, 0],
    [1, 0, 0],
  ];

  async function arcQuaternion(arc: [Vec3, Vec3]): Promise<Quat> {
    // Merging with the identity class reads off the arc's own quaternion
    // without any client-side geometry.
    const response = await client.merge(arc, identityArc);
    return response.quaternion;
  }

  it("composed arcs carry the product quaternion", async () => {
    const arcA: [Vec3, Vec3] = [
      [0, 1, 0],
      [0, 0, 1],
    ];
    const arcB: [Vec3, Vec3] = [
      [1, 0, 0],
      [0, 1, 0],
    ];
    const response = await client.merge(arcA, arcB);
    const matched = matchedConfiguration(response);
    const product = await client.mul(await arcQuaternion(arcA), await arcQuaternion(arcB));
    expect(quatDistance(matched.quaternion, product)).toBeLessThan(1e-9);
    // The matched arcs join at the shared point and span the merged arc.
    expect(vdist(matched.matchedRight.end, matched.sharedPoint)).toBe(0);
    expect(vdist(matched.matchedLeft.start, matched.sharedPoint)).toBe(0);
    expect(vdist(matched.matchedRight.start, matched.merged.start)).toBe(0);
    expect(vdist(matched.matchedLeft.end, matched.merged.end)).toBe(0);
  });

  it("an arc composed with its reverse collapses to the identity class", async () => {
    const arc: [Vec3, Vec3] = [
      [0, 1, 0],
      [0, 0, 1],
    ];
    const reversed: [Vec3, Vec3] = [arc[1], arc[0]];
    const response = await client.merge(arc, reversed);
    expect(quatDistance(response.quaternion, { s: 1, v: [0, 0, 0] })).toBeLessThan(1e-12);
    expect(vdist(response.pair[0], response.pair[1])).toBeLessThan(1e-12);
  });

  it("a quarter arc in the e1e2 plane reads as a half turn", async () => {
    const quarter: [Vec3, Vec3] = [
      [1, 0, 0],
      [0, 1, 0],
    ];
    const q = await arcQuaternion(quarter);
    const angle = 2 * Math.acos(Math.min(1, Math.max(-1, Math.abs(q.s))));
    expect(Math.abs(angle - Math.PI)).toBeLessThan(1e-9);
  });
});

describe("belt explorer", () => {
  it("the final slider position is the degenerate point frame at e1", async () => {
    const data = new BeltData(await client.belt(24, 8));
    const finalRow = data.rowNearest(data.tMax);
    expect(Math.abs(finalRow.t - 2 * Math.PI)).toBeLessThan(1e-12);
    expect(BeltData.isCollapsed(finalRow)).toBe(true);
    for (const frame of finalRow.frames) {
      expect(vdist(frame.e, [1, 0, 0])).toBeLessThan(1e-9);
    }
  });

  it("the initial row is a full loop whose marker data is self-consistent", async () => {
    const data = new BeltData(await client.belt(24, 8));
    const firstRow = data.rowNearest(0);
    expect(BeltData.isCollapsed(firstRow)).toBe(false);
    // Loop closes: first and last frames of the row coincide.
    const frames = firstRow.frames;
    expect(vdist(frames[0]!.e, frames[frames.length - 1]!.e)).toBeLessThan(1e-12);
    // The orientation readout columns are unit vectors.
    for (const frame of frames) {
      const col: Vec3 = [frame.r[0][0], frame.r[1][0], frame.r[2][0]];
      expect(Math.abs(Math.hypot(...col) - 1)).toBeLessThan(1e-9);
    }
  });
});
