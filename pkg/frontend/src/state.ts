/** App state machine: one lookup at a time, every API outcome a named state. */

import type { ScoreApi } from "./api.js";
import type { ReportViewModel } from "./viewmodel.js";
import { buildViewModel } from "./viewmodel.js";

export type AppState =
  | { phase: "idle" }
  | { phase: "loading"; screenName: string }
  | { phase: "ready"; vm: ReportViewModel }
  | { phase: "notFound"; screenName: string; message: string }
  | { phase: "rateLimited"; secondsLeft: number }
  | { phase: "error"; screenName: string; message: string; retryable: boolean };

export type StateListener = (state: AppState) => void;

export class ReportController {
  private readonly api: ScoreApi;
  private readonly listener: StateListener;
  private state: AppState = { phase: "idle" };
  // Only the newest submission may publish its result.
  private sequence = 0;

  constructor(api: ScoreApi, listener: StateListener) {
    this.api = api;
    this.listener = listener;
  }

  current(): AppState {
    return this.state;
  }

  private publish(state: AppState): void {
    this.state = state;
    this.listener(state);
  }

  async submit(rawName: string): Promise<void> {
    const screenName = rawName.trim();
    if (screenName.length === 0) return;
    const ticket = ++this.sequence;
    this.publish({ phase: "loading", screenName });

    const outcome = await this.api.getScore(screenName, { detail: true });
    if (ticket !== this.sequence) return;

    switch (outcome.kind) {
      case "ok": {
        // Fetched after the score so the population includes this account.
        const cdfOutcome = await this.api.getCdf();
        if (ticket !== this.sequence) return;
        const cdf = cdfOutcome.kind === "ok" ? cdfOutcome.cdf : null;
        this.publish({ phase: "ready", vm: buildViewModel(outcome.report, cdf) });
        return;
      }
      case "notFound":
        this.publish({ phase: "notFound", screenName, message: outcome.message });
        return;
      case "rateLimited":
        this.publish({ phase: "rateLimited", secondsLeft: outcome.retryAfterSeconds });
        return;
      case "error":
        this.publish({
          phase: "error",
          screenName,
          message: outcome.message,
          retryable: outcome.retryable,
        });
        return;
    }
  }

  /** One-second countdown step; call from a timer while rate limited. */
  tick(): void {
    if (this.state.phase !== "rateLimited") return;
    const left = this.state.secondsLeft - 1;
    if (left <= 0) {
      this.publish({ phase: "idle" });
    } else {
      this.publish({ phase: "rateLimited", secondsLeft: left });
    }
  }
}
