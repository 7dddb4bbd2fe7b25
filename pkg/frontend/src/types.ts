/** Wire shapes of the scoring service API, as documented in docs/service-api.md. */

export const SCORE_NAMES = [
  "overall",
  "network",
  "user",
  "friends",
  "temporal",
  "content",
  "sentiment",
] as const;

export type ScoreName = (typeof SCORE_NAMES)[number];

export type Scores = Record<ScoreName, number>;

export interface ReportMeta {
  tweets_used: number;
  mentions_used: number;
  model_version: string;
  timestamp: string;
}

/** Raw timing arrays echoed by the service when ?detail=1 is passed. */
export interface ReportDetail {
  inter_tweet_seconds: number[];
  tweet_hours_utc: number[];
}

export interface ScoreReport {
  screen_name: string;
  user_id: string;
  scores: Scores;
  meta: ReportMeta;
  detail?: ReportDetail;
}

/** GET /api/v1/stats/cdf: points are [score edge, fraction <= edge]. */
export interface CdfResponse {
  empty: boolean;
  unique_accounts: number;
  bins?: number;
  points?: [number, number][];
}

export interface HealthResponse {
  status: string;
  service_version: string;
  model_version: string;
  forest_backend: string;
  scored_accounts: number;
}

/** Shared error envelope; 429 bodies also carry a top-level retry_after. */
export interface ApiErrorBody {
  error: { code: string; message: string };
  retry_after?: number;
}

export function isScores(value: unknown): value is Scores {
  if (typeof value !== "object" || value === null) return false;
  const obj = value as Record<string, unknown>;
  const keys = Object.keys(obj);
  if (keys.length !== SCORE_NAMES.length) return false;
  for (const name of SCORE_NAMES) {
    const v = obj[name];
    if (typeof v !== "number" || !Number.isFinite(v) || v < 0 || v > 1) return false;
  }
  return true;
}

/** Structural check for a score report; guards the UI against malformed payloads. */
export function isScoreReport(value: unknown): value is ScoreReport {
  if (typeof value !== "object" || value === null) return false;
  const obj = value as Record<string, unknown>;
  if (typeof obj.screen_name !== "string" || obj.screen_name.length === 0) return false;
  if (typeof obj.user_id !== "string") return false;
  if (!isScores(obj.scores)) return false;
  const meta = obj.meta as Record<string, unknown> | undefined;
  if (typeof meta !== "object" || meta === null) return false;
  if (typeof meta.tweets_used !== "number" || typeof meta.mentions_used !== "number") return false;
  if (typeof meta.model_version !== "string" || typeof meta.timestamp !== "string") return false;
  if (obj.detail !== undefined) {
    const d = obj.detail as Record<string, unknown>;
    if (typeof d !== "object" || d === null) return false;
    if (!Array.isArray(d.inter_tweet_seconds) || !Array.isArray(d.tweet_hours_utc)) return false;
    if (!d.inter_tweet_seconds.every((x) => typeof x === "number" && x >= 0)) return false;
    if (!d.tweet_hours_utc.every((x) => typeof x === "number" && x >= 0 && x <= 23)) return false;
  }
  return true;
}

export function isCdfResponse(value: unknown): value is CdfResponse {
  if (typeof value !== "object" || value === null) return false;
  const obj = value as Record<string, unknown>;
  if (typeof obj.empty !== "boolean" || typeof obj.unique_accounts !== "number") return false;
  if (obj.empty) return true;
  if (!Array.isArray(obj.points) || obj.points.length === 0) return false;
  return obj.points.every(
    (p) =>
      Array.isArray(p) &&
      p.length === 2 &&
      typeof p[0] === "number" &&
      typeof p[1] === "number",
  );
}
