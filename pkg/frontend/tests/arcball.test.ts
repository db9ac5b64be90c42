import { describe, expect, it } from "vitest";

import { pointerToSphere } from "../src/arcball.js";
import { vnorm } from "../src/vec.js";

describe("pointerToSphere", () => {
  it("maps the center to the front pole", () => {
    expect(pointerToSphere(200, 200, 400, 400)).toEqual([0, 0, 1]);
  });

  it("maps the rim to the silhouette", () => {
    const right = pointerToSphere(400, 200, 400, 400);
    expect(right[0]).toBeCloseTo(1, 12);
    expect(right[2]).toBeCloseTo(0, 12);
    const top = pointerToSphere(200, 0, 400, 400);
    expect(top[1]).toBeCloseTo(1, 12);
  });

  it("clamps beyond the silhouette onto the rim", () => {
    const outside = pointerToSphere(400, 0, 400, 400);
    expect(Math.abs(vnorm(outside) - 1)).toBeLessThan(1e-12);
    expect(outside[2]).toBe(0);
  });

  it("always returns unit vectors", () => {
    for (let px = 0; px <= 400; px += 57) {
      for (let py = 0; py <= 400; py += 57) {
        const p = pointerToSphere(px, py, 400, 400);
        expect(Math.abs(vnorm(p) - 1)).toBeLessThan(1e-12);
      }
    }
  });

  it("respects non-square viewports", () => {
    const p = pointerToSphere(300, 100, 600, 200);
    expect(Math.abs(vnorm(p) - 1)).toBeLessThan(1e-12);
    expect(p).toEqual([0, 0, 1]);
  });
});
