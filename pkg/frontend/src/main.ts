/** DOM wiring for the three panels: trackball, slide rule, belt explorer. */

import { ApiError, PairquatClient } from "./api.js";
import { pointerToSphere } from "./arcball.js";
import { arcPoints, arcProblem, matchedConfiguration, type ArcSpec } from "./arcs.js";
import { BeltData } from "./belt.js";
import { OrientationState } from "./orientation.js";
import { rotationAngleOf, type Vec3 } from "./quat.js";
import { clear, drawPath, drawPoint, drawSphereOutline, wireframe, type Viewport } from "./render.js";
import { vdist } from "./vec.js";

const client = new PairquatClient(
  new URLSearchParams(location.search).get("api") ?? "http://127.0.0.1:8000",
);

function viewportOf(canvas: HTMLCanvasElement): Viewport {
  const ctx = canvas.getContext("2d");
  if (!ctx) throw new Error("canvas 2d context unavailable");
  return { ctx, width: canvas.width, height: canvas.height };
}

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
}

function fmtQuat(q: { s: number; v: Vec3 }): string {
  const f = (x: number) => x.toFixed(4);
  return `[${f(q.s)}, (${f(q.v[0])}, ${f(q.v[1])}, ${f(q.v[2])})]`;
}

// ---------------------------------------------------------------- trackball

const orientation = new OrientationState();
const WIRE = wireframe();
const trackballCanvas = byId<HTMLCanvasElement>("trackball-canvas");
const trackballStatus = byId<HTMLElement>("trackball-status");
let dragAnchor: Vec3 | null = null;
let dragCurrent: Vec3 | null = null;

function renderTrackball(): void {
  const view = viewportOf(trackballCanvas);
  clear(view);
  drawSphereOutline(view);
  for (const path of WIRE) drawPath(view, path, "#2e6f9e", 1, orientation.matrix);
  for (const [axis, color] of [
    [[1, 0, 0], "#e05555"],
    [[0, 1, 0], "#55c06a"],
    [[0, 0, 1], "#5577e0"],
  ] as [Vec3, string][]) {
    drawPath(view, [[0, 0, 0], axis], color, 3, orientation.matrix);
    drawPoint(view, axis, color, 4, orientation.matrix);
  }
  if (dragAnchor && dragCurrent) {
    drawPath(view, arcPoints({ start: dragAnchor, end: dragCurrent }, 24), "#f0c040", 2);
    drawPoint(view, dragAnchor, "#f0c040", 4);
  }
  trackballStatus.textContent =
    `orientation ${fmtQuat(orientation.quaternion)}  drags: ${orientation.history.length}`;
}

function spherePointFromEvent(event: PointerEvent): Vec3 {
  const rect = trackballCanvas.getBoundingClientRect();
  return pointerToSphere(
    ((event.clientX - rect.left) / rect.width) * trackballCanvas.width,
    ((event.clientY - rect.top) / rect.height) * trackballCanvas.height,
    trackballCanvas.width,
    trackballCanvas.height,
  );
}

trackballCanvas.addEventListener("pointerdown", (event) => {
  dragAnchor = spherePointFromEvent(event);
  dragCurrent = dragAnchor;
  trackballCanvas.setPointerCapture(event.pointerId);
  renderTrackball();
});

trackballCanvas.addEventListener("pointermove", (event) => {
  if (!dragAnchor) return;
  dragCurrent = spherePointFromEvent(event);
  renderTrackball();
});

trackballCanvas.addEventListener("pointerup", (event) => {
  if (!dragAnchor) return;
  const anchor = dragAnchor;
  const release = spherePointFromEvent(event);
  dragAnchor = dragCurrent = null;
  if (vdist(anchor, release) < 1e-9) {
    renderTrackball(); // zero-length drag: identity, nothing to do
    return;
  }
  const token = orientation.beginDrag();
  client
    .trackball(anchor, release)
    .then((result) => {
      if (orientation.applyDrag(result, token)) renderTrackball();
    })
    .catch((err: unknown) => {
      trackballStatus.textContent =
        err instanceof ApiError && err.code === "AntipodalInputs"
          ? "drag ignored: antipodal points have no unique rotation"
          : `drag failed: ${String(err)}`;
    });
});

byId<HTMLButtonElement>("trackball-reset").addEventListener("click", () => {
  orientation.reset();
  renderTrackball();
});

// --------------------------------------------------------------- slide rule

const slideCanvas = byId<HTMLCanvasElement>("slide-canvas");
const slideStatus = byId<HTMLElement>("slide-status");

function readArc(prefix: string): ArcSpec {
  const parse = (id: string): Vec3 => {
    const raw = byId<HTMLInputElement>(id).value;
    const parts = raw.split(",").map(Number);
    if (parts.length !== 3 || parts.some(Number.isNaN)) {
      throw new Error(`${id}: expected "x,y,z"`);
    }
    return [parts[0]!, parts[1]!, parts[2]!];
  };
  return { start: parse(`${prefix}-start`), end: parse(`${prefix}-end`) };
}

function renderSlide(
  arcA: ArcSpec,
  arcB: ArcSpec,
  matched?: ReturnType<typeof matchedConfiguration>,
): void {
  const view = viewportOf(slideCanvas);
  clear(view);
  drawSphereOutline(view);
  drawPath(view, arcPoints(arcA), "#e05555", 2.5);
  drawPath(view, arcPoints(arcB), "#55c06a", 2.5);
  if (matched) {
    drawPath(view, arcPoints(matched.matchedRight), "#3f8d50", 1.5);
    drawPath(view, arcPoints(matched.matchedLeft), "#a33d3d", 1.5);
    drawPath(view, arcPoints(matched.merged), "#f0c040", 3);
    drawPoint(view, matched.sharedPoint, "#ffffff", 4);
  }
}

byId<HTMLButtonElement>("slide-compose").addEventListener("click", () => {
  let arcA: ArcSpec;
  let arcB: ArcSpec;
  try {
    arcA = readArc("arc-a");
    arcB = readArc("arc-b");
  } catch (err) {
    slideStatus.textContent = String(err);
    return;
  }
  for (const [name, arc] of [["A", arcA], ["B", arcB]] as const) {
    const problem = arcProblem(arc);
    if (problem) {
      slideStatus.textContent = `arc ${name}: ${problem}`;
      return;
    }
  }
  client
    .merge([arcA.start, arcA.end], [arcB.start, arcB.end])
    .then((response) => {
      const matched = matchedConfiguration(response);
      renderSlide(arcA, arcB, matched);
      const degrees = (rotationAngleOf(matched.quaternion) * 180) / Math.PI;
      const tiny = vdist(matched.merged.start, matched.merged.end) < 1e-9;
      slideStatus.textContent =
        `merged class ${fmtQuat(matched.quaternion)}; rotation by ${degrees.toFixed(1)} deg` +
        (tiny ? " (zero-length arc: identity class)" : "");
    })
    .catch((err: unknown) => {
      slideStatus.textContent = `compose failed: ${String(err)}`;
    });
});

// ------------------------------------------------------------ belt explorer

const beltCanvas = byId<HTMLCanvasElement>("belt-canvas");
const beltStatus = byId<HTMLElement>("belt-status");
const beltSlider = byId<HTMLInputElement>("belt-slider");
let beltData: BeltData | null = null;
let markerPhase = 0;

function renderBelt(): void {
  if (!beltData) return;
  const t = (Number(beltSlider.value) / 1000) * beltData.tMax;
  const row = beltData.rowNearest(t);
  const view = viewportOf(beltCanvas);
  clear(view);
  drawSphereOutline(view);
  const loop = row.frames.map((f) => f.e);
  const collapsed = BeltData.isCollapsed(row);
  if (collapsed) {
    drawPoint(view, loop[0]!, "#f0c040", 6);
  } else {
    drawPath(view, loop, "#f0c040", 2.5);
  }
  const marker = row.frames[Math.floor(markerPhase) % row.frames.length]!;
  drawPoint(view, marker.e, "#ffffff", 5);
  const image = [marker.r[0][0], marker.r[1][0], marker.r[2][0]] as Vec3;
  beltStatus.textContent =
    `t = ${row.t.toFixed(3)}  ${collapsed ? "loop collapsed to e1" : "loop on sphere"}  ` +
    `marker ${fmtQuat(marker.q)}  R e1 = (${image.map((x) => x.toFixed(3)).join(", ")})`;
}

function animateBelt(): void {
  markerPhase += 0.5;
  renderBelt();
  requestAnimationFrame(animateBelt);
}

beltSlider.addEventListener("input", renderBelt);

client
  .belt(120, 48)
  .then((frames) => {
    beltData = new BeltData(frames);
    animateBelt();
  })
  .catch((err: unknown) => {
    beltStatus.textContent = `belt frames unavailable: ${String(err)}`;
  });

// ---------------------------------------------------------------------------

client.health().catch(() => {
  trackballStatus.textContent =
    "service unreachable; run `pairquat serve` (or pass ?api=http://host:port)";
});
renderTrackball();
