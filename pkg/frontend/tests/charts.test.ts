import { describe, expect, it } from "vitest";

import { cdfChart, formatScore, histogramChart, scoreBars } from "../src/charts.js";
import { buildViewModel } from "../src/viewmodel.js";
import { cdfFromScores, makeReport } from "./helpers.js";

describe("scoreBars", () => {
  it("labels every bar with its exact API score", () => {
    const vm = buildViewModel(makeReport(), null);
    const svg = scoreBars(vm.bars);
    for (const bar of vm.bars) {
      expect(svg).toContain(`data-score="${bar.name}">${formatScore(bar.value)}<`);
    }
  });

  it("renders stably", () => {
    const vm = buildViewModel(makeReport(), null);
    expect(scoreBars(vm.bars)).toMatchSnapshot();
  });
});

describe("histogramChart", () => {
  it("shows each nonzero bin count as text", () => {
    const vm = buildViewModel(makeReport(), null);
    const svg = histogramChart(vm.intervalHistogram!);
    expect(svg).toContain(">2<");
    expect(svg).toContain("&lt;1s");
    expect(svg).toContain("&gt;1d");
  });

  it("renders stably", () => {
    const vm = buildViewModel(makeReport(), null);
    expect(histogramChart(vm.intervalHistogram!)).toMatchSnapshot();
    expect(histogramChart(vm.hourHistogram!)).toMatchSnapshot();
  });
});

describe("cdfChart", () => {
  it("marks the account score with its percentile", () => {
    const cdf = cdfFromScores([0.2, 0.4, 0.4, 0.9], 10);
    const vm = buildViewModel(makeReport({ scores: { ...makeReport().scores, overall: 0.9 } }), cdf);
    const svg = cdfChart(vm.cdf!);
    expect(svg).toContain('data-percentile="100%"');
    expect(svg).toContain("0.90 (100%)");
    expect(svg).toContain("4 accounts");
  });

  it("renders stably", () => {
    const cdf = cdfFromScores([0.2, 0.4, 0.4, 0.9], 10);
    const vm = buildViewModel(makeReport(), cdf);
    expect(cdfChart(vm.cdf!)).toMatchSnapshot();
  });
});
