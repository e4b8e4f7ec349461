// DOM wiring: sliders, upload forms, ranked list, explanation panel.
// All numeric content comes from the view models in ranking.ts and
// explanation.ts, which copy API payload values verbatim.

import { ApiClient, ApiError } from "./api";
import {
  emptyExplanation,
  explanationView,
  type EmptyExplanation,
  type ExplanationView,
} from "./explanation";
import {
  applyRankingFailure,
  applyRankingSuccess,
  initialRankingState,
  rankingRows,
  type RankingState,
} from "./ranking";
import type { Weights } from "./types";
import { DEFAULT_WEIGHTS, renormalize, type SliderValues } from "./weights";

const CRITERIA = ["skills", "experience", "education", "location"] as const;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function fmt(value: number): string {
  return value.toFixed(4);
}

export class App {
  private state: RankingState = initialRankingState;
  private weights: Weights = { ...DEFAULT_WEIGHTS };
  private jobId: string | null = null;
  private selectedCandidate: string | null = null;

  constructor(private api: ApiClient) {}

  mount(): void {
    for (const criterion of CRITERIA) {
      const slider = el<HTMLInputElement>(`slider-${criterion}`);
      // Re-rank on release, not on drag: bounds the request rate.
      slider.addEventListener("change", () => void this.onSliderRelease());
      slider.addEventListener("input", () => this.renderSliderLabels());
    }
    el<HTMLFormElement>("job-form").addEventListener("submit", (event) => {
      event.preventDefault();
      void this.onCreateJob();
    });
    el<HTMLFormElement>("upload-form").addEventListener("submit", (event) => {
      event.preventDefault();
      void this.onUpload();
    });
    el<HTMLButtonElement>("banner-dismiss").addEventListener("click", () => {
      this.state = { ...this.state, banner: null };
      this.renderBanner();
    });
    this.renderSliderLabels();
    this.renderRanking();
    this.renderExplanation(emptyExplanation("Select a candidate to inspect the reasoning"));
  }

  private sliderValues(): SliderValues {
    const read = (criterion: string) => Number(el<HTMLInputElement>(`slider-${criterion}`).value);
    return {
      skills: read("skills"),
      experience: read("experience"),
      education: read("education"),
      location: read("location"),
    };
  }

  private renderSliderLabels(): void {
    const weights = renormalize(this.sliderValues());
    for (const criterion of CRITERIA) {
      el(`label-${criterion}`).textContent = weights[criterion].toFixed(2);
    }
  }

  private async onSliderRelease(): Promise<void> {
    this.weights = renormalize(this.sliderValues());
    await this.refreshRanking();
  }

  private async onCreateJob(): Promise<void> {
    const title = el<HTMLInputElement>("job-title").value.trim();
    const skills = el<HTMLInputElement>("job-skills").value
      .split(",")
      .map((s) => s.trim())
      .filter(Boolean);
    const months = Number(el<HTMLInputElement>("job-months").value || "0");
    const education = Number(el<HTMLSelectElement>("job-education").value);
    const location = el<HTMLInputElement>("job-location").value.trim() || null;
    try {
      const record = await this.api.createJob({
        title,
        required_skills: skills,
        min_experience_months: months,
        required_education: education,
        location,
      });
      this.jobId = record.job_id;
      el("job-current").textContent = `${record.job.title} (${record.job_id.slice(0, 8)})`;
      await this.refreshRanking();
    } catch (error) {
      this.fail(error);
    }
  }

  private async onUpload(): Promise<void> {
    const input = el<HTMLInputElement>("resume-files");
    const files = input.files ? Array.from(input.files) : [];
    try {
      for (const file of files) {
        await this.api.uploadResume(file);
      }
      input.value = "";
      await this.refreshRanking();
    } catch (error) {
      this.fail(error);
    }
  }

  private async refreshRanking(): Promise<void> {
    if (!this.jobId) return;
    try {
      const payload = await this.api.fetchRanking(this.jobId, this.weights);
      this.state = applyRankingSuccess(this.state, payload);
    } catch (error) {
      if (error instanceof DOMException && error.name === "AbortError") {
        return; // superseded by a newer request
      }
      this.fail(error);
    }
    this.renderRanking();
    this.renderBanner();
  }

  private fail(error: unknown): void {
    const message =
      error instanceof ApiError
        ? `Service error: ${error.message}`
        : "Service unreachable; showing the last good ranking";
    this.state = applyRankingFailure(this.state, message);
    this.renderBanner();
  }

  private renderBanner(): void {
    const banner = el("banner");
    banner.hidden = this.state.banner === null;
    el("banner-text").textContent = this.state.banner ?? "";
  }

  private renderRanking(): void {
    const body = el<HTMLTableSectionElement>("ranking-body");
    body.replaceChildren();
    if (!this.state.ranking) return;
    for (const row of rankingRows(this.state.ranking)) {
      const tr = document.createElement("tr");
      tr.dataset.candidateId = row.candidateId;
      if (row.candidateId === this.selectedCandidate) tr.classList.add("selected");
      const cells = [
        String(row.position),
        row.candidateId.slice(0, 10),
        fmt(row.total),
        ...row.criteria.map((c) => fmt(c.raw)),
      ];
      for (const text of cells) {
        const td = document.createElement("td");
        td.textContent = text;
        tr.appendChild(td);
      }
      tr.addEventListener("click", () => void this.onSelectCandidate(row.candidateId));
      body.appendChild(tr);
    }
  }

  private async onSelectCandidate(candidateId: string): Promise<void> {
    if (!this.jobId) return;
    this.selectedCandidate = candidateId;
    this.renderRanking();
    try {
      // Explanations are fetched lazily per selected candidate.
      const payload = await this.api.fetchExplanation(this.jobId, candidateId, this.weights);
      this.renderExplanation(explanationView(payload));
    } catch (error) {
      if (error instanceof ApiError && error.status === 404) {
        this.renderExplanation(emptyExplanation("Candidate or job no longer exists"));
      } else {
        this.fail(error);
      }
    }
  }

  private renderExplanation(view: ExplanationView | EmptyExplanation): void {
    const panel = el("explanation");
    panel.replaceChildren();
    if (view.kind === "empty") {
      const p = document.createElement("p");
      p.className = "empty-state";
      p.textContent = view.message;
      panel.appendChild(p);
      return;
    }

    const heading = document.createElement("h3");
    heading.textContent = `Candidate ${view.candidateId.slice(0, 10)} - total ${fmt(view.total)}`;
    panel.appendChild(heading);

    const badges = document.createElement("div");
    badges.className = "badges";
    for (const badge of view.matched) {
      const span = document.createElement("span");
      span.className = "badge";
      span.style.opacity = String(0.45 + 0.55 * badge.intensity);
      span.textContent = `${badge.jdSkill} ~ ${badge.resumeSkill} (${badge.similarity.toFixed(2)})`;
      badges.appendChild(span);
    }
    panel.appendChild(badges);

    if (view.unmatched.length) {
      const missing = document.createElement("p");
      missing.className = "unmatched";
      missing.textContent = `Not covered: ${view.unmatched.join(", ")}`;
      panel.appendChild(missing);
    }

    const bars = document.createElement("div");
    bars.className = "bars";
    for (const bar of view.bars) {
      const row = document.createElement("div");
      row.className = "bar-row";
      const label = document.createElement("span");
      label.className = "bar-label";
      label.textContent = `${bar.criterion} ${fmt(bar.contribution)}`;
      const track = document.createElement("div");
      track.className = "bar-track";
      const fill = document.createElement("div");
      fill.className = "bar-fill";
      fill.style.width = `${bar.widthPercent}%`;
      track.appendChild(fill);
      row.append(label, track);
      bars.appendChild(row);
    }
    panel.appendChild(bars);

    const notes = document.createElement("p");
    notes.className = "notes";
    notes.textContent =
      `Experience ${view.experience.candidateMonths}/${view.experience.requiredMonths} months ` +
      `(score ${fmt(view.experience.score)}) | education ${view.education.candidateLevel}` +
      ` vs required ${view.education.requiredLevel} | location ${view.locationMatch ? "match" : "no match"}`;
    panel.appendChild(notes);
  }
}
