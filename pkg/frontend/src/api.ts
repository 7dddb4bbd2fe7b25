/** Typed client for the scoring service.

All methods resolve to a discriminated outcome instead of throwing, so every
API error code maps to a rendered state rather than an unhandled rejection.
The fetch function is injected, which is what makes the client testable
without a network.
*/

import type { CdfResponse, ScoreReport } from "./types.js";
import { isCdfResponse, isScoreReport } from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export type ScoreOutcome =
  | { kind: "ok"; report: ScoreReport }
  | { kind: "notFound"; message: string }
  | { kind: "rateLimited"; retryAfterSeconds: number }
  | { kind: "error"; message: string; retryable: boolean };

export type CdfOutcome =
  | { kind: "ok"; cdf: CdfResponse }
  | { kind: "error"; message: string };

/** What the UI layer needs from a client; lets tests substitute fakes. */
export interface ScoreApi {
  getScore(screenName: string, opts?: { detail?: boolean }): Promise<ScoreOutcome>;
  getCdf(bins?: number): Promise<CdfOutcome>;
}

function errorMessage(body: unknown, fallback: string): string {
  if (typeof body === "object" && body !== null) {
    const err = (body as Record<string, unknown>).error;
    if (typeof err === "object" && err !== null) {
      const msg = (err as Record<string, unknown>).message;
      if (typeof msg === "string" && msg.length > 0) return msg;
    }
  }
  return fallback;
}

function retryAfterSeconds(res: Response, body: unknown): number {
  const header = res.headers.get("retry-after");
  if (header !== null) {
    const n = Number(header);
    if (Number.isFinite(n) && n >= 1) return Math.ceil(n);
  }
  if (typeof body === "object" && body !== null) {
    const n = (body as Record<string, unknown>).retry_after;
    if (typeof n === "number" && n >= 1) return Math.ceil(n);
  }
  return 1;
}

export class ApiClient implements ScoreApi {
  private readonly baseUrl: string;
  private readonly fetchFn: FetchLike;
  // One in-flight request per screen name; concurrent callers share it.
  private readonly inflight = new Map<string, Promise<ScoreOutcome>>();

  constructor(baseUrl: string, fetchFn: FetchLike) {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
    this.fetchFn = fetchFn;
  }

  getScore(screenName: string, opts: { detail?: boolean } = {}): Promise<ScoreOutcome> {
    const detail = opts.detail ?? true;
    const key = `${screenName.toLowerCase()}|${detail ? 1 : 0}`;
    const pending = this.inflight.get(key);
    if (pending !== undefined) return pending;
    const promise = this.fetchScore(screenName, detail).finally(() => {
      this.inflight.delete(key);
    });
    this.inflight.set(key, promise);
    return promise;
  }

  inflightCount(): number {
    return this.inflight.size;
  }

  private async fetchScore(screenName: string, detail: boolean): Promise<ScoreOutcome> {
    const suffix = detail ? "?detail=1" : "";
    const url = `${this.baseUrl}/api/v1/score/${encodeURIComponent(screenName)}${suffix}`;
    let res: Response;
    try {
      res = await this.fetchFn(url);
    } catch (exc) {
      return { kind: "error", message: `network failure: ${String(exc)}`, retryable: true };
    }
    let body: unknown = null;
    try {
      body = await res.json();
    } catch {
      if (res.ok) return { kind: "error", message: "malformed response body", retryable: false };
    }
    if (res.status === 404) {
      return { kind: "notFound", message: errorMessage(body, "account not found") };
    }
    if (res.status === 429) {
      return { kind: "rateLimited", retryAfterSeconds: retryAfterSeconds(res, body) };
    }
    if (!res.ok) {
      const retryable = res.status >= 500;
      return {
        kind: "error",
        message: errorMessage(body, `request failed with status ${res.status}`),
        retryable,
      };
    }
    if (!isScoreReport(body)) {
      return { kind: "error", message: "malformed score report", retryable: false };
    }
    return { kind: "ok", report: body };
  }

  async getCdf(bins = 100): Promise<CdfOutcome> {
    const url = `${this.baseUrl}/api/v1/stats/cdf?bins=${bins}`;
    let res: Response;
    try {
      res = await this.fetchFn(url);
    } catch (exc) {
      return { kind: "error", message: `network failure: ${String(exc)}` };
    }
    let body: unknown = null;
    try {
      body = await res.json();
    } catch {
      return { kind: "error", message: "malformed response body" };
    }
    if (!res.ok) {
      return { kind: "error", message: errorMessage(body, `status ${res.status}`) };
    }
    if (!isCdfResponse(body)) {
      return { kind: "error", message: "malformed distribution payload" };
    }
    return { kind: "ok", cdf: body };
  }
}
