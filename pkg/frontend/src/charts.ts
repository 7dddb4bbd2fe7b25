/** Dependency-free SVG chart builders.

Pure string functions: same input, same markup. That keeps them
snapshot-testable and renderable by any static host without a chart
library.
*/

import type { BarDatum, CdfOverlay, Histogram } from "./viewmodel.js";

export function formatScore(v: number): string {
  return v.toFixed(2);
}

function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function round1(v: number): string {
  return String(Math.round(v * 10) / 10);
}

/** Seven horizontal score bars, one per model, labelled with the raw score. */
export function scoreBars(bars: BarDatum[]): string {
  const rowH = 26;
  const labelW = 90;
  const trackW = 240;
  const width = labelW + trackW + 56;
  const height = bars.length * rowH + 8;
  const parts: string[] = [];
  parts.push(
    `<svg class="chart chart-scores" viewBox="0 0 ${width} ${height}" role="img" aria-label="model scores">`,
  );
  bars.forEach((bar, i) => {
    const y = 4 + i * rowH;
    const w = Math.round(bar.value * trackW);
    const shade = bar.name === "overall" ? "bar-overall" : "bar-class";
    parts.push(`<text x="${labelW - 6}" y="${y + 16}" text-anchor="end" class="bar-label">${esc(bar.name)}</text>`);
    parts.push(`<rect x="${labelW}" y="${y + 4}" width="${trackW}" height="16" class="bar-track"/>`);
    parts.push(`<rect x="${labelW}" y="${y + 4}" width="${w}" height="16" class="${shade}"/>`);
    parts.push(
      `<text x="${labelW + trackW + 8}" y="${y + 16}" class="bar-value" data-score="${esc(bar.name)}">${formatScore(bar.value)}</text>`,
    );
  });
  parts.push("</svg>");
  return parts.join("");
}

/** Vertical count bars with a numeric label over each nonzero bin. */
export function histogramChart(hist: Histogram): string {
  const n = hist.counts.length;
  const barW = n > 12 ? 18 : 34;
  const gap = 6;
  const plotH = 120;
  const width = n * (barW + gap) + 16;
  const height = plotH + 46;
  const peak = Math.max(1, ...hist.counts);
  const parts: string[] = [];
  parts.push(
    `<svg class="chart chart-hist" viewBox="0 0 ${width} ${height}" role="img" aria-label="${esc(hist.title)}">`,
  );
  parts.push(`<text x="8" y="14" class="chart-title">${esc(hist.title)}</text>`);
  hist.counts.forEach((count, i) => {
    const x = 8 + i * (barW + gap);
    const h = Math.round((count / peak) * (plotH - 24));
    const y = 24 + (plotH - 24) - h;
    parts.push(`<rect x="${x}" y="${y}" width="${barW}" height="${h}" class="hist-bar"/>`);
    if (count > 0) {
      parts.push(
        `<text x="${x + barW / 2}" y="${y - 3}" text-anchor="middle" class="hist-count">${count}</text>`,
      );
    }
    const label = hist.binLabels[i] ?? "";
    parts.push(
      `<text x="${x + barW / 2}" y="${plotH + 16}" text-anchor="middle" class="hist-label">${esc(label)}</text>`,
    );
  });
  parts.push("</svg>");
  return parts.join("");
}

/** Population score CDF with this account marked at its percentile. */
export function cdfChart(overlay: CdfOverlay): string {
  const width = 320;
  const height = 180;
  const padL = 36;
  const padB = 24;
  const padT = 16;
  const plotW = width - padL - 12;
  const plotH = height - padT - padB;
  const sx = (score: number) => padL + score * plotW;
  const sy = (frac: number) => padT + (1 - frac) * plotH;

  const pts = overlay.points.map(([x, y]) => `${round1(sx(x))},${round1(sy(y))}`).join(" ");
  const mx = round1(sx(overlay.score));
  const my = round1(sy(overlay.percentile));
  const pctLabel = `${Math.round(overlay.percentile * 100)}%`;
  const parts: string[] = [];
  parts.push(
    `<svg class="chart chart-cdf" viewBox="0 0 ${width} ${height}" role="img" aria-label="population score distribution">`,
  );
  parts.push(
    `<text x="8" y="12" class="chart-title">score distribution, ${overlay.accounts} accounts</text>`,
  );
  parts.push(`<line x1="${padL}" y1="${sy(0)}" x2="${padL + plotW}" y2="${sy(0)}" class="axis"/>`);
  parts.push(`<line x1="${padL}" y1="${sy(0)}" x2="${padL}" y2="${sy(1)}" class="axis"/>`);
  for (const t of [0, 0.5, 1]) {
    parts.push(
      `<text x="${sx(t)}" y="${height - 6}" text-anchor="middle" class="tick">${t}</text>`,
    );
    parts.push(`<text x="${padL - 6}" y="${round1(sy(t) + 4)}" text-anchor="end" class="tick">${t}</text>`);
  }
  parts.push(`<polyline points="${pts}" class="cdf-line" fill="none"/>`);
  parts.push(`<line x1="${mx}" y1="${sy(0)}" x2="${mx}" y2="${my}" class="marker-guide"/>`);
  parts.push(`<circle cx="${mx}" cy="${my}" r="4" class="marker"/>`);
  parts.push(
    `<text x="${mx}" y="${round1(Number(my) - 8)}" text-anchor="middle" class="marker-label" data-percentile="${pctLabel}">${formatScore(overlay.score)} (${pctLabel})</text>`,
  );
  parts.push("</svg>");
  return parts.join("");
}
