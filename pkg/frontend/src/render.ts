/** Renders an AppState to an HTML string. Pure, so tests can pin every
displayed number without a browser. */

import { cdfChart, formatScore, histogramChart, scoreBars } from "./charts.js";
import type { AppState } from "./state.js";
import type { ReportViewModel } from "./viewmodel.js";

function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function reportHtml(vm: ReportViewModel): string {
  const parts: string[] = [];
  parts.push(`<section class="report" data-screen-name="${esc(vm.screenName)}">`);
  parts.push(
    `<h2>@${esc(vm.screenName)} <span class="overall" data-score="overall">${formatScore(vm.scores.overall)}</span></h2>`,
  );
  parts.push(`<div class="plot plot-scores">${scoreBars(vm.bars)}</div>`);

  parts.push('<div class="plot-row">');
  if (vm.intervalHistogram !== null) {
    parts.push(`<div class="plot plot-intervals">${histogramChart(vm.intervalHistogram)}</div>`);
  } else {
    parts.push('<div class="plot plot-intervals plot-empty">not enough tweets for timing plots</div>');
  }
  if (vm.hourHistogram !== null) {
    parts.push(`<div class="plot plot-hours">${histogramChart(vm.hourHistogram)}</div>`);
  }
  parts.push("</div>");

  if (vm.cdf !== null) {
    parts.push(`<div class="plot plot-cdf">${cdfChart(vm.cdf)}</div>`);
  } else {
    parts.push('<div class="plot plot-cdf plot-empty">no population distribution yet</div>');
  }

  parts.push(
    `<p class="meta">based on ${vm.meta.tweets_used} tweets and ${vm.meta.mentions_used} mentions` +
      ` <span class="model-version">model ${esc(vm.meta.model_version.slice(0, 12))}</span>` +
      ` <time>${esc(vm.meta.timestamp)}</time></p>`,
  );
  parts.push("</section>");
  return parts.join("");
}

export function render(state: AppState): string {
  switch (state.phase) {
    case "idle":
      return '<p class="hint">enter a screen name to score an account</p>';
    case "loading":
      return `<p class="loading" role="status">scoring @${esc(state.screenName)}&hellip;</p>`;
    case "ready":
      return reportHtml(state.vm);
    case "notFound":
      return (
        `<div class="panel panel-not-found" role="alert"><h2>account not found</h2>` +
        `<p>no account named @${esc(state.screenName)}</p></div>`
      );
    case "rateLimited":
      return (
        `<div class="panel panel-rate-limited" role="alert"><h2>rate limit reached</h2>` +
        `<p>try again in <span class="countdown">${state.secondsLeft}</span>s</p></div>`
      );
    case "error":
      return (
        `<div class="panel panel-error" role="alert"><h2>something went wrong</h2>` +
        `<p>${esc(state.message)}</p>` +
        (state.retryable
          ? `<button type="button" class="retry" data-name="${esc(state.screenName)}">retry</button>`
          : "") +
        "</div>"
      );
  }
}
