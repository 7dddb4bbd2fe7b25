import type { FetchLike } from "../src/api.js";
import type { CdfResponse, ScoreReport } from "../src/types.js";

export function makeReport(overrides: Partial<ScoreReport> = {}): ScoreReport {
  return {
    screen_name: "alice",
    user_id: "1000001",
    scores: {
      overall: 0.12,
      network: 0.08,
      user: 0.22,
      friends: 0.15,
      temporal: 0.05,
      content: 0.18,
      sentiment: 0.31,
    },
    meta: {
      tweets_used: 37,
      mentions_used: 4,
      model_version: "a".repeat(64),
      timestamp: "2023-11-14T22:13:20Z",
    },
    detail: {
      inter_tweet_seconds: [0, 5, 30, 120, 3000, 7200, 90000, 90001],
      tweet_hours_utc: [0, 0, 13, 23],
    },
    ...overrides,
  };
}

/** Server-style CDF for a list of raw scores: bins+1 points at edges i/bins. */
export function cdfFromScores(scores: number[], bins = 100): CdfResponse {
  const unique = scores.length;
  const points: [number, number][] = [];
  for (let i = 0; i <= bins; i += 1) {
    const edge = i / bins;
    const below = scores.filter((s) => s <= edge).length;
    points.push([edge, below / unique]);
  }
  return { empty: false, unique_accounts: unique, bins, points };
}

export function jsonResponse(body: unknown, status = 200, headers: Record<string, string> = {}): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json", ...headers },
  });
}

export interface RecordingFetch {
  fetch: FetchLike;
  calls: string[];
}

/** Routes by substring match against the URL; records every call. */
export function routedFetch(routes: Array<[string, () => Response | Promise<Response>]>): RecordingFetch {
  const calls: string[] = [];
  const fetch: FetchLike = async (url) => {
    calls.push(url);
    for (const [needle, responder] of routes) {
      if (url.includes(needle)) return responder();
    }
    return jsonResponse({ error: { code: "not_found", message: `no route for ${url}` } }, 404);
  };
  return { fetch, calls };
}

/** Tiny deterministic PRNG so randomized tests are reproducible. */
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}
