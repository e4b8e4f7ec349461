// Thin client for the ranking service. At most one ranking request is
// in flight: issuing a new one aborts the previous, so a slow stale
// response can never overwrite a fresh ranking.

import type {
  CandidateRecord,
  ExplanationResponse,
  JobRecord,
  RankingResponse,
  Weights,
} from "./types";
import { toQueryValue } from "./weights";

export class ApiError extends Error {
  constructor(
    public status: number,
    message: string,
  ) {
    super(message);
  }
}

async function asJson<T>(response: Response): Promise<T> {
  if (!response.ok) {
    let detail = `HTTP ${response.status}`;
    try {
      const body = (await response.json()) as { detail?: string };
      if (body.detail) detail = body.detail;
    } catch {
      // keep the status text
    }
    throw new ApiError(response.status, detail);
  }
  return (await response.json()) as T;
}

export class ApiClient {
  private rankingController: AbortController | null = null;

  constructor(
    private baseUrl: string = "",
    private fetchImpl: typeof fetch = fetch.bind(globalThis),
  ) {}

  async health(): Promise<unknown> {
    return asJson(await this.fetchImpl(`${this.baseUrl}/health`));
  }

  async uploadResume(file: File): Promise<CandidateRecord> {
    const form = new FormData();
    form.append("file", file);
    return asJson(await this.fetchImpl(`${this.baseUrl}/resumes`, { method: "POST", body: form }));
  }

  async createJob(job: object): Promise<JobRecord> {
    return asJson(
      await this.fetchImpl(`${this.baseUrl}/jobs`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(job),
      }),
    );
  }

  /** Fetch a ranking, aborting any ranking request still in flight. */
  async fetchRanking(jobId: string, weights: Weights, k?: number): Promise<RankingResponse> {
    this.rankingController?.abort();
    const controller = new AbortController();
    this.rankingController = controller;
    const params = new URLSearchParams({ weights: toQueryValue(weights) });
    if (k !== undefined) params.set("k", String(k));
    const url = `${this.baseUrl}/jobs/${encodeURIComponent(jobId)}/ranking?${params}`;
    return asJson(await this.fetchImpl(url, { signal: controller.signal }));
  }

  async fetchExplanation(
    jobId: string,
    candidateId: string,
    weights?: Weights,
  ): Promise<ExplanationResponse> {
    // Passing the current weights keeps the panel's total bar equal to
    // the total shown in the ranked list.
    const query = weights ? `?${new URLSearchParams({ weights: toQueryValue(weights) })}` : "";
    const url =
      `${this.baseUrl}/jobs/${encodeURIComponent(jobId)}` +
      `/candidates/${encodeURIComponent(candidateId)}/explanation${query}`;
    return asJson(await this.fetchImpl(url));
  }
}
