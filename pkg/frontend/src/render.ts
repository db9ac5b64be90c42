/** Canvas drawing: orthographic sphere views shared by all three panels. */

import type { Vec3 } from "./quat.js";
import type { Mat3 } from "./vec.js";
import { mat3Apply } from "./vec.js";

export interface Viewport {
  ctx: CanvasRenderingContext2D;
  width: number;
  height: number;
}

function toScreen(view: Viewport, p: Vec3): [number, number, number] {
  const radius = (Math.min(view.width, view.height) / 2) * 0.92;
  return [
    view.width / 2 + radius * p[0],
    view.height / 2 - radius * p[1],
    p[2],
  ];
}

export function clear(view: Viewport): void {
  view.ctx.fillStyle = "#10131a";
  view.ctx.fillRect(0, 0, view.width, view.height);
}

export function drawSphereOutline(view: Viewport): void {
  const radius = (Math.min(view.width, view.height) / 2) * 0.92;
  view.ctx.strokeStyle = "#3a4356";
  view.ctx.lineWidth = 1.5;
  view.ctx.beginPath();
  view.ctx.arc(view.width / 2, view.height / 2, radius, 0, 2 * Math.PI);
  view.ctx.stroke();
}

/** Polyline of sphere points; back-hemisphere segments draw dimmer. */
export function drawPath(
  view: Viewport,
  points: Vec3[],
  color: string,
  width = 2,
  orientation?: Mat3,
): void {
  const ctx = view.ctx;
  let prev: [number, number, number] | null = null;
  for (const raw of points) {
    const p = orientation ? mat3Apply(orientation, raw) : raw;
    const cur = toScreen(view, p);
    if (prev) {
      const front = prev[2] >= 0 && cur[2] >= 0;
      ctx.strokeStyle = color;
      ctx.globalAlpha = front ? 1.0 : 0.25;
      ctx.lineWidth = width;
      ctx.beginPath();
      ctx.moveTo(prev[0], prev[1]);
      ctx.lineTo(cur[0], cur[1]);
      ctx.stroke();
    }
    prev = cur;
  }
  ctx.globalAlpha = 1.0;
}

export function drawPoint(
  view: Viewport,
  p: Vec3,
  color: string,
  size = 5,
  orientation?: Mat3,
): void {
  const q = orientation ? mat3Apply(orientation, p) : p;
  const [x, y, z] = toScreen(view, q);
  view.ctx.fillStyle = color;
  view.ctx.globalAlpha = z >= 0 ? 1.0 : 0.35;
  view.ctx.beginPath();
  view.ctx.arc(x, y, size, 0, 2 * Math.PI);
  view.ctx.fill();
  view.ctx.globalAlpha = 1.0;
}

/** Latitude/longitude wireframe of the unit sphere. */
export function wireframe(latCount = 5, lonCount = 8, segments = 48): Vec3[][] {
  const paths: Vec3[][] = [];
  for (let i = 1; i <= latCount; i++) {
    const phi = (Math.PI * i) / (latCount + 1) - Math.PI / 2;
    const ring: Vec3[] = [];
    for (let k = 0; k <= segments; k++) {
      const theta = (2 * Math.PI * k) / segments;
      ring.push([
        Math.cos(phi) * Math.cos(theta),
        Math.sin(phi),
        Math.cos(phi) * Math.sin(theta),
      ]);
    }
    paths.push(ring);
  }
  for (let j = 0; j < lonCount; j++) {
    const theta = (2 * Math.PI * j) / lonCount;
    const line: Vec3[] = [];
    for (let k = 0; k <= segments; k++) {
      const phi = (Math.PI * k) / segments - Math.PI / 2;
      line.push([
        Math.cos(phi) * Math.cos(theta),
        Math.sin(phi),
        Math.cos(phi) * Math.sin(theta),
      ]);
    }
    paths.push(line);
  }
  return paths;
}
