/** Builds everything the report page displays from API payloads.

Every number here is either copied from a response field or counted from the
detail arrays the service echoes; nothing is scored client-side.
*/

import type { CdfResponse, ReportMeta, ScoreName, ScoreReport, Scores } from "./types.js";
import { SCORE_NAMES } from "./types.js";

export interface BarDatum {
  name: ScoreName;
  value: number;
}

export interface Histogram {
  title: string;
  binLabels: string[];
  counts: number[];
  total: number;
}

export interface CdfOverlay {
  points: [number, number][];
  accounts: number;
  score: number;
  /** Fraction of scored accounts with overall score <= this account's. */
  percentile: number;
}

export interface ReportViewModel {
  screenName: string;
  userId: string;
  scores: Scores;
  bars: BarDatum[];
  intervalHistogram: Histogram | null;
  hourHistogram: Histogram | null;
  cdf: CdfOverlay | null;
  meta: ReportMeta;
}

// Gap bins span seconds to days; automation shows up at the short end.
const INTERVAL_EDGES = [1, 10, 60, 600, 3600, 86400];
const INTERVAL_LABELS = ["<1s", "1-10s", "10-60s", "1-10m", "10-60m", "1-24h", ">1d"];

export function intervalHistogram(gapsSeconds: number[]): Histogram | null {
  if (gapsSeconds.length === 0) return null;
  const counts = new Array(INTERVAL_LABELS.length).fill(0) as number[];
  for (const gap of gapsSeconds) {
    let i = 0;
    while (i < INTERVAL_EDGES.length && gap >= (INTERVAL_EDGES[i] as number)) i += 1;
    counts[i] = (counts[i] as number) + 1;
  }
  return {
    title: "time between tweets",
    binLabels: [...INTERVAL_LABELS],
    counts,
    total: gapsSeconds.length,
  };
}

export function hourHistogram(hoursUtc: number[]): Histogram | null {
  if (hoursUtc.length === 0) return null;
  const counts = new Array(24).fill(0) as number[];
  for (const h of hoursUtc) {
    const i = Math.min(23, Math.max(0, Math.floor(h)));
    counts[i] = (counts[i] as number) + 1;
  }
  return {
    title: "tweets by hour (UTC)",
    binLabels: counts.map((_, i) => String(i)),
    counts,
    total: hoursUtc.length,
  };
}

/** Fraction at the smallest CDF edge at or above the score.

The service emits edges at i/bins and scores are far coarser than the
default 100 bins, so this equals the exact fraction of accounts at or below
the score.
*/
export function percentileFromCdf(points: [number, number][], score: number): number {
  for (const [edge, fraction] of points) {
    if (edge >= score) return fraction;
  }
  return 1.0;
}

export function cdfOverlay(cdf: CdfResponse | null, overallScore: number): CdfOverlay | null {
  if (cdf === null || cdf.empty || cdf.points === undefined || cdf.points.length === 0) {
    return null;
  }
  return {
    points: cdf.points,
    accounts: cdf.unique_accounts,
    score: overallScore,
    percentile: percentileFromCdf(cdf.points, overallScore),
  };
}

export function buildViewModel(report: ScoreReport, cdf: CdfResponse | null): ReportViewModel {
  const bars = SCORE_NAMES.map((name) => ({ name, value: report.scores[name] }));
  return {
    screenName: report.screen_name,
    userId: report.user_id,
    scores: report.scores,
    bars,
    intervalHistogram: report.detail ? intervalHistogram(report.detail.inter_tweet_seconds) : null,
    hourHistogram: report.detail ? hourHistogram(report.detail.tweet_hours_utc) : null,
    cdf: cdfOverlay(cdf, report.scores.overall),
    meta: report.meta,
  };
}
