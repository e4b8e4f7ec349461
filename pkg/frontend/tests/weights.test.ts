import { describe, expect, it } from "vitest";

import { DEFAULT_WEIGHTS, isAcceptedByApi, renormalize, toQueryValue } from "../src/weights";

describe("renormalize", () => {
  it("projects raw sliders (2,1,1,1) to (0.4,0.2,0.2,0.2)", () => {
    const weights = renormalize({ skills: 2, experience: 1, education: 1, location: 1 });
    expect(weights).toEqual({ skills: 0.4, experience: 0.2, education: 0.2, location: 0.2 });
  });

  it("keeps degenerate single-criterion weights", () => {
    const weights = renormalize({ skills: 7, experience: 0, education: 0, location: 0 });
    expect(weights).toEqual({ skills: 1, experience: 0, education: 0, location: 0 });
  });

  it("falls back to defaults when every slider is zero", () => {
    expect(renormalize({ skills: 0, experience: 0, education: 0, location: 0 })).toEqual(
      DEFAULT_WEIGHTS,
    );
  });

  it("rejects negative slider values", () => {
    expect(() =>
      renormalize({ skills: -1, experience: 1, education: 1, location: 1 }),
    ).toThrow();
  });

  it("always yields weights the API accepts (simplex within 1e-6)", () => {
    // Exhaustive over the UI's actual slider range: integers 0..10.
    for (let s = 0; s <= 10; s++) {
      for (let e = 0; e <= 10; e++) {
        for (let d = 0; d <= 10; d++) {
          for (let l = 0; l <= 10; l++) {
            const weights = renormalize({ skills: s, experience: e, education: d, location: l });
            expect(isAcceptedByApi(weights)).toBe(true);
          }
        }
      }
    }
  });

  it("accepts fractional slider positions too", () => {
    const cases = [
      { skills: 0.1, experience: 0.7, education: 3.3, location: 9.9 },
      { skills: 1e-9, experience: 0, education: 0, location: 0 },
      { skills: 1000, experience: 1, education: 0.5, location: 2 },
    ];
    for (const sliders of cases) {
      expect(isAcceptedByApi(renormalize(sliders))).toBe(true);
    }
  });
});

describe("toQueryValue", () => {
  it("emits the comma form in criterion order", () => {
    expect(toQueryValue({ skills: 0.5, experience: 0.2, education: 0.2, location: 0.1 })).toBe(
      "0.5,0.2,0.2,0.1",
    );
  });
});
