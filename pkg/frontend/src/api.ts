/** Typed client for the pairquat JSON service. */

import type { Quat, Vec3 } from "./quat.js";
import type { Mat3 } from "./vec.js";

export class ApiError extends Error {
  constructor(
    readonly code: string,
    readonly detail: string,
    readonly status: number,
  ) {
    super(`${code}: ${detail}`);
    this.name = "ApiError";
  }
}

export interface TrackballResponse {
  matrix: Mat3;
  quaternion: Quat;
}

export interface MergeResponse {
  pair: [Vec3, Vec3];
  quaternion: Quat;
  overlap: Vec3;
}

export interface BeltFrame {
  s: number;
  t: number;
  e: Vec3;
  q: Quat;
  r: Mat3;
}

type PairBody = readonly [Vec3, Vec3];

export class PairquatClient {
  constructor(readonly baseUrl: string) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    let response: Response;
    try {
      response = await fetch(this.baseUrl + path, {
        method,
        headers: body === undefined ? undefined : { "Content-Type": "application/json" },
        body: body === undefined ? undefined : JSON.stringify(body),
      });
    } catch (err) {
      throw new ApiError("Unreachable", String(err), 0);
    }
    const payload: unknown = await response.json();
    if (!response.ok) {
      const err = payload as { error?: string; detail?: string };
      throw new ApiError(err.error ?? "Unknown", err.detail ?? "", response.status);
    }
    return payload as T;
  }

  health(): Promise<{ ok: boolean }> {
    return this.request("GET", "/api/health");
  }

  mul(a: Quat, b: Quat): Promise<Quat> {
    return this.request("POST", "/api/mul", { a, b });
  }

  trackball(uI: Vec3, uF: Vec3): Promise<TrackballResponse> {
    return this.request("POST", "/api/trackball", { uI, uF });
  }

  merge(left: PairBody, right: PairBody): Promise<MergeResponse> {
    return this.request("POST", "/api/merge", { left, right });
  }

  slerp(a: Quat, b: Quat, t: number, method: "s2" | "s3" = "s3"): Promise<Quat> {
    return this.request("POST", "/api/slerp", { a, b, t, method });
  }

  async belt(ns: number, nt: number): Promise<BeltFrame[]> {
    const payload = await this.request<{ frames: BeltFrame[] }>(
      "GET",
      `/api/belt?ns=${ns}&nt=${nt}`,
    );
    return payload.frames;
  }
}
