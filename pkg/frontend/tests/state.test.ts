import { describe, expect, it } from "vitest";

import type { CdfOutcome, ScoreApi, ScoreOutcome } from "../src/api.js";
import type { AppState } from "../src/state.js";
import { ReportController } from "../src/state.js";
import { cdfFromScores, makeReport } from "./helpers.js";

function fakeApi(
  score: () => Promise<ScoreOutcome>,
  cdf: () => Promise<CdfOutcome> = async () => ({ kind: "ok", cdf: cdfFromScores([0.12]) }),
): ScoreApi & { scoreCalls: string[] } {
  const api = {
    scoreCalls: [] as string[],
    getScore(name: string): Promise<ScoreOutcome> {
      api.scoreCalls.push(name);
      return score();
    },
    getCdf: cdf,
  };
  return api;
}

function tracked(api: ScoreApi): { controller: ReportController; states: AppState[] } {
  const states: AppState[] = [];
  const controller = new ReportController(api, (s) => states.push(s));
  return { controller, states };
}

describe("submit", () => {
  it("walks loading to ready and builds the view model", async () => {
    const api = fakeApi(async () => ({ kind: "ok", report: makeReport() }));
    const { controller, states } = tracked(api);

    await controller.submit("alice");
    expect(states.map((s) => s.phase)).toEqual(["loading", "ready"]);
    const last = states[1]!;
    if (last.phase !== "ready") throw new Error("expected ready");
    expect(last.vm.screenName).toBe("alice");
    expect(last.vm.cdf).not.toBeNull();
  });

  it("trims input and ignores empty submissions", async () => {
    const api = fakeApi(async () => ({ kind: "ok", report: makeReport() }));
    const { controller, states } = tracked(api);
    await controller.submit("   ");
    expect(states).toEqual([]);
    expect(api.scoreCalls).toEqual([]);

    await controller.submit("  alice  ");
    expect(api.scoreCalls).toEqual(["alice"]);
  });

  it("keeps the report when only the distribution fetch fails", async () => {
    const api = fakeApi(
      async () => ({ kind: "ok", report: makeReport() }),
      async () => ({ kind: "error", message: "down" }),
    );
    const { controller, states } = tracked(api);
    await controller.submit("alice");
    const last = states.at(-1)!;
    if (last.phase !== "ready") throw new Error("expected ready");
    expect(last.vm.cdf).toBeNull();
  });

  it("maps each outcome to its own state", async () => {
    const notFound = tracked(fakeApi(async () => ({ kind: "notFound", message: "gone" })));
    await notFound.controller.submit("ghost");
    expect(notFound.states.at(-1)).toEqual({ phase: "notFound", screenName: "ghost", message: "gone" });

    const limited = tracked(fakeApi(async () => ({ kind: "rateLimited", retryAfterSeconds: 3 })));
    await limited.controller.submit("alice");
    expect(limited.states.at(-1)).toEqual({ phase: "rateLimited", secondsLeft: 3 });

    const failed = tracked(fakeApi(async () => ({ kind: "error", message: "boom", retryable: true })));
    await failed.controller.submit("alice");
    expect(failed.states.at(-1)).toEqual({
      phase: "error",
      screenName: "alice",
      message: "boom",
      retryable: true,
    });
  });

  it("drops stale responses when a newer lookup started", async () => {
    let releaseFirst!: (o: ScoreOutcome) => void;
    const firstGate = new Promise<ScoreOutcome>((resolve) => {
      releaseFirst = resolve;
    });
    let call = 0;
    const api = fakeApi(() => {
      call += 1;
      if (call === 1) return firstGate;
      return Promise.resolve({ kind: "ok", report: makeReport({ screen_name: "bob" }) });
    });
    const { controller, states } = tracked(api);

    const first = controller.submit("alice");
    const second = controller.submit("bob");
    await second;
    releaseFirst({ kind: "ok", report: makeReport({ screen_name: "alice" }) });
    await first;

    const readies = states.filter((s) => s.phase === "ready");
    expect(readies.length).toBe(1);
    if (readies[0]!.phase === "ready") {
      expect(readies[0]!.vm.screenName).toBe("bob");
    }
    expect(controller.current().phase).toBe("ready");
  });
});

describe("rate limit countdown", () => {
  it("ticks down to idle", async () => {
    const { controller, states } = tracked(
      fakeApi(async () => ({ kind: "rateLimited", retryAfterSeconds: 2 })),
    );
    await controller.submit("alice");
    controller.tick();
    expect(states.at(-1)).toEqual({ phase: "rateLimited", secondsLeft: 1 });
    controller.tick();
    expect(states.at(-1)).toEqual({ phase: "idle" });
  });

  it("is inert in other states", async () => {
    const { controller, states } = tracked(fakeApi(async () => ({ kind: "ok", report: makeReport() })));
    await controller.submit("alice");
    const count = states.length;
    controller.tick();
    expect(states.length).toBe(count);
  });
});
