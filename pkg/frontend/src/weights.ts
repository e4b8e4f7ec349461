// Slider values live in arbitrary non-negative units; the API accepts
// only a weight simplex (non-negative, sum within 1e-6 of 1). The UI
// renormalizes on slider release, never while dragging.

import type { Weights } from "./types";

export const DEFAULT_WEIGHTS: Weights = {
  skills: 0.5,
  experience: 0.2,
  education: 0.2,
  location: 0.1,
};

export interface SliderValues {
  skills: number;
  experience: number;
  education: number;
  location: number;
}

/** Project raw slider values onto the weight simplex.
 *  All-zero sliders fall back to the default profile. */
export function renormalize(sliders: SliderValues): Weights {
  const values = [sliders.skills, sliders.experience, sliders.education, sliders.location];
  if (values.some((v) => v < 0 || !Number.isFinite(v))) {
    throw new Error(`slider values must be non-negative finite numbers: ${values}`);
  }
  const total = values.reduce((a, b) => a + b, 0);
  if (total <= 0) {
    return { ...DEFAULT_WEIGHTS };
  }
  return {
    skills: sliders.skills / total,
    experience: sliders.experience / total,
    education: sliders.education / total,
    location: sliders.location / total,
  };
}

/** True when the API's validation (sum within 1e-6 of 1, all >= 0) accepts these weights. */
export function isAcceptedByApi(weights: Weights): boolean {
  const values = [weights.skills, weights.experience, weights.education, weights.location];
  if (values.some((v) => v < 0 || !Number.isFinite(v))) return false;
  const total = values.reduce((a, b) => a + b, 0);
  return Math.abs(total - 1.0) <= 1e-6;
}

/** Comma form used by the ranking endpoint: "skills,experience,education,location". */
export function toQueryValue(weights: Weights): string {
  return [weights.skills, weights.experience, weights.education, weights.location].join(",");
}
