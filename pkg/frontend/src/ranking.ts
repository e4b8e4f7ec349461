// View model for the ranked candidate list. Pure passthrough of API
// numbers: totals and per-criterion values are copied, never derived.

import type { RankingResponse } from "./types";

export interface RankingRow {
  position: number;
  candidateId: string;
  /** Exactly the API's total for this candidate. */
  total: number;
  providerId: string;
  criteria: { criterion: string; raw: number; contribution: number }[];
}

export function rankingRows(payload: RankingResponse): RankingRow[] {
  return payload.entries.map((entry, index) => ({
    position: index + 1,
    candidateId: entry.candidate_id,
    total: entry.total,
    providerId: entry.provider_id,
    criteria: entry.breakdown.map((c) => ({
      criterion: c.criterion,
      raw: c.raw,
      contribution: c.contribution,
    })),
  }));
}

// Banner-and-retain state for ranking updates: a failed refresh keeps
// the last good list on screen behind a dismissible error banner.

export interface RankingState {
  ranking: RankingResponse | null;
  banner: string | null;
}

export const initialRankingState: RankingState = { ranking: null, banner: null };

export function applyRankingSuccess(state: RankingState, payload: RankingResponse): RankingState {
  void state;
  return { ranking: payload, banner: null };
}

export function applyRankingFailure(state: RankingState, message: string): RankingState {
  return { ranking: state.ranking, banner: message };
}
