// View model for the per-candidate explanation panel: matched skills as
// similarity badges, the unmatched requirement list, and contribution
// bars whose lengths are proportional to the API contributions and sum
// to the total bar. All numbers are copied from the payload.

import type { ExplanationResponse } from "./types";

export interface SkillBadge {
  jdSkill: string;
  resumeSkill: string;
  /** Exactly the API similarity. */
  similarity: number;
  /** Display intensity in [0,1]; 1.0 similarity renders at full intensity. */
  intensity: number;
}

export interface ContributionBar {
  criterion: string;
  raw: number;
  weight: number;
  /** Exactly the API contribution. */
  contribution: number;
  /** Bar length as a percentage of the total bar. */
  widthPercent: number;
}

export interface ExplanationView {
  kind: "loaded";
  candidateId: string;
  /** Exactly the API total. */
  total: number;
  matched: SkillBadge[];
  unmatched: string[];
  bars: ContributionBar[];
  experience: { candidateMonths: number; requiredMonths: number; score: number };
  education: { candidateLevel: number; requiredLevel: number };
  locationMatch: boolean;
}

export interface EmptyExplanation {
  kind: "empty";
  message: string;
}

export function emptyExplanation(message = "No explanation available"): EmptyExplanation {
  return { kind: "empty", message };
}

export function explanationView(payload: ExplanationResponse): ExplanationView {
  const total = payload.total;
  return {
    kind: "loaded",
    candidateId: payload.candidate_id,
    total,
    matched: payload.matched.map((pair) => ({
      jdSkill: pair.jd_skill,
      resumeSkill: pair.resume_skill ?? "",
      similarity: pair.similarity,
      intensity: Math.max(0, Math.min(1, pair.similarity)),
    })),
    unmatched: [...payload.unmatched_jd_skills],
    bars: payload.contributions.map((c) => ({
      criterion: c.criterion,
      raw: c.raw,
      weight: c.weight,
      contribution: c.contribution,
      widthPercent: total > 0 ? (c.contribution / total) * 100 : 0,
    })),
    experience: {
      candidateMonths: payload.experience_note.candidate_months,
      requiredMonths: payload.experience_note.required_months,
      score: payload.experience_note.score,
    },
    education: {
      candidateLevel: payload.education_note.candidate_level,
      requiredLevel: payload.education_note.required_level,
    },
    locationMatch: payload.location_note.match,
  };
}
