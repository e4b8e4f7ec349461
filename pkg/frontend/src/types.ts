// Payload shapes of the ranking service API. The UI renders these
// verbatim: every displayed number originates from a response body.

export interface Weights {
  skills: number;
  experience: number;
  education: number;
  location: number;
}

export interface CriterionScore {
  criterion: "skills" | "experience" | "education" | "location";
  raw: number;
  weight: number;
  contribution: number;
}

export interface SkillPair {
  jd_skill: string;
  resume_skill: string | null;
  similarity: number;
}

export interface RankingEntry {
  candidate_id: string;
  total: number;
  provider_id: string;
  breakdown: CriterionScore[];
  skill_pairs: SkillPair[];
}

export interface RankingResponse {
  job_id: string;
  weights: Weights;
  k: number | null;
  entries: RankingEntry[];
}

export interface ExplanationResponse {
  job_id: string;
  candidate_id: string;
  total: number;
  matched: SkillPair[];
  unmatched_jd_skills: string[];
  experience_note: { candidate_months: number; required_months: number; score: number };
  education_note: { candidate_level: number; required_level: number };
  location_note: { match: boolean };
  contributions: CriterionScore[];
}

export interface CandidateRecord {
  candidate_id: string;
  source_file: string;
  ingested_at: string;
  pipeline_version: string;
  profile: unknown;
}

export interface JobRecord {
  job_id: string;
  created_at: string;
  job: {
    id: string;
    title: string;
    required_skills: string[];
    min_experience_months: number;
    required_education: number;
    location?: string | null;
    language?: string | null;
  };
}
