"""Weighted multi-criterion scoring, ranking and explanations.

A candidate is scored against a job on four criteria (skills,
experience, education, location), each mapped to [0, 1], combined as a
weighted sum over a weight simplex. The skill criterion is
requirement coverage: for every required skill take the best cosine
similarity against the candidate's skills, then average (mean of max).
Every score decomposes into per-criterion contributions that sum to the
total, which is what the explanation layer exposes.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .embed import EmbeddingProvider, EmbeddingVector, cosine
from .errors import InconsistentInputs, InvalidJobDescription, InvalidWeights
from .extract.education import EducationLevel
from .extract.fuzzy import fold, folded_similarity
from .extract.profile import ResumeProfile

WEIGHT_SUM_TOLERANCE = 1e-6
EXPLANATION_MATCH_THRESHOLD = 0.6
LOCATION_FUZZY_THRESHOLD = 0.9

DEFAULT_WEIGHTS = (0.5, 0.2, 0.2, 0.1)


class Criterion(str, Enum):
    SKILLS = "skills"
    EXPERIENCE = "experience"
    EDUCATION = "education"
    LOCATION = "location"


@dataclass(frozen=True)
class JobDescription:
    id: str
    title: str
    required_skills: tuple[str, ...]
    min_experience_months: int = 0
    required_education: EducationLevel = EducationLevel.NONE
    location: str | None = None
    language: str | None = None

    def validate(self) -> "JobDescription":
        if not self.required_skills or any(not s.strip() for s in self.required_skills):
            raise InvalidJobDescription(
                f"job {self.id}: required_skills must be a non-empty list of non-empty strings"
            )
        if self.min_experience_months < 0:
            raise InvalidJobDescription(f"job {self.id}: negative experience requirement")
        return self

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "title": self.title,
            "required_skills": list(self.required_skills),
            "min_experience_months": self.min_experience_months,
            "required_education": int(self.required_education),
            "location": self.location,
            "language": self.language,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "JobDescription":
        try:
            return cls(
                id=str(data["id"]),
                title=str(data.get("title", "")),
                required_skills=tuple(str(s).strip() for s in data["required_skills"] if str(s).strip()),
                min_experience_months=int(data.get("min_experience_months", 0)),
                required_education=EducationLevel(int(data.get("required_education", 0))),
                location=data.get("location"),
                language=data.get("language"),
            ).validate()
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidJobDescription(f"invalid job description: {exc}") from exc


@dataclass(frozen=True)
class WeightProfile:
    skills: float
    experience: float
    education: float
    location: float

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.skills, self.experience, self.education, self.location)

    def as_dict(self) -> dict:
        return {
            "skills": self.skills,
            "experience": self.experience,
            "education": self.education,
            "location": self.location,
        }

    def weight_for(self, criterion: Criterion) -> float:
        return getattr(self, criterion.value)

    @classmethod
    def default(cls) -> "WeightProfile":
        return cls(*DEFAULT_WEIGHTS)

    @classmethod
    def from_values(cls, skills, experience, education, location) -> "WeightProfile":
        """External-input parser: non-negative, sum within 1e-6 of one,
        then renormalized exactly."""
        values = (skills, experience, education, location)
        try:
            values = tuple(float(v) for v in values)
        except (TypeError, ValueError) as exc:
            raise InvalidWeights(f"weights must be numbers: {exc}") from exc
        if any(v < 0 for v in values):
            raise InvalidWeights(f"weights must be non-negative, got {values}")
        total = sum(values)
        if abs(total - 1.0) > WEIGHT_SUM_TOLERANCE:
            raise InvalidWeights(f"weights must sum to 1 within {WEIGHT_SUM_TOLERANCE}, got {total}")
        return cls(*(v / total for v in values))

    @classmethod
    def normalized(cls, skills, experience, education, location) -> "WeightProfile":
        """Project any non-negative, non-zero vector onto the simplex."""
        values = (float(skills), float(experience), float(education), float(location))
        if any(v < 0 for v in values):
            raise InvalidWeights(f"weights must be non-negative, got {values}")
        total = sum(values)
        if total <= 0:
            raise InvalidWeights("weights must not all be zero")
        return cls(*(v / total for v in values))

    @classmethod
    def from_dict(cls, data: dict) -> "WeightProfile":
        try:
            return cls.from_values(
                data["skills"], data["experience"], data["education"], data["location"]
            )
        except KeyError as exc:
            raise InvalidWeights(f"missing weight key {exc}") from exc

    @classmethod
    def parse(cls, text: str) -> "WeightProfile":
        """Parse the "skills,experience,education,location" comma form."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 4:
            raise InvalidWeights(f"expected 4 comma-separated weights, got {len(parts)}")
        return cls.from_values(*parts)


@dataclass(frozen=True)
class CriterionScore:
    criterion: Criterion
    raw: float
    weight: float
    contribution: float

    @classmethod
    def of(cls, criterion: Criterion, raw: float, weight: float) -> "CriterionScore":
        return cls(criterion=criterion, raw=raw, weight=weight, contribution=raw * weight)

    def to_dict(self) -> dict:
        return {
            "criterion": self.criterion.value,
            "raw": self.raw,
            "weight": self.weight,
            "contribution": self.contribution,
        }


@dataclass(frozen=True)
class SkillPair:
    jd_skill: str
    resume_skill: str | None
    similarity: float

    def to_dict(self) -> dict:
        return {
            "jd_skill": self.jd_skill,
            "resume_skill": self.resume_skill,
            "similarity": self.similarity,
        }


@dataclass(frozen=True)
class MatchResult:
    candidate_id: str
    job_id: str
    total: float
    breakdown: tuple[CriterionScore, ...]
    provider_id: str
    skill_pairs: tuple[SkillPair, ...]

    def to_dict(self) -> dict:
        return {
            "candidate_id": self.candidate_id,
            "job_id": self.job_id,
            "total": self.total,
            "breakdown": [c.to_dict() for c in self.breakdown],
            "provider_id": self.provider_id,
            "skill_pairs": [p.to_dict() for p in self.skill_pairs],
        }


@dataclass(frozen=True)
class Ranking:
    job_id: str
    entries: tuple[tuple[str, float], ...]  # (candidate_id, total), non-increasing

    def to_dict(self) -> dict:
        return {
            "job_id": self.job_id,
            "entries": [{"candidate_id": cid, "total": total} for cid, total in self.entries],
        }


@dataclass(frozen=True)
class Explanation:
    job_id: str
    candidate_id: str
    total: float
    matched: tuple[SkillPair, ...]
    unmatched_jd_skills: tuple[str, ...]
    experience_note: tuple[int, int, float]  # candidate months, required months, raw score
    education_note: tuple[int, int]  # candidate ordinal, required ordinal
    location_note: bool
    contributions: tuple[CriterionScore, ...]

    def to_dict(self) -> dict:
        return {
            "job_id": self.job_id,
            "candidate_id": self.candidate_id,
            "total": self.total,
            "matched": [p.to_dict() for p in self.matched],
            "unmatched_jd_skills": list(self.unmatched_jd_skills),
            "experience_note": {
                "candidate_months": self.experience_note[0],
                "required_months": self.experience_note[1],
                "score": self.experience_note[2],
            },
            "education_note": {
                "candidate_level": self.education_note[0],
                "required_level": self.education_note[1],
            },
            "location_note": {"match": self.location_note},
            "contributions": [c.to_dict() for c in self.contributions],
        }


def _skill_score_impl(
    profile_skills: Sequence[str],
    jd_skills: Sequence[str],
    provider: EmbeddingProvider,
) -> tuple[float, list[SkillPair], str]:
    if not jd_skills:
        raise InvalidJobDescription("jd_skills must be non-empty")
    resume_skills = sorted(set(profile_skills))
    unique_texts = list(dict.fromkeys([*jd_skills, *resume_skills]))
    embedded = provider.embed_many(unique_texts)
    vectors: dict[str, EmbeddingVector] = dict(zip(unique_texts, embedded))
    provider_id = embedded[0].provider_id if embedded else provider.id

    pairs: list[SkillPair] = []
    total = 0.0
    for jd_skill in jd_skills:
        best_sim = 0.0
        best_partner: str | None = None
        for resume_skill in resume_skills:
            sim = max(0.0, cosine(vectors[jd_skill], vectors[resume_skill]))
            if best_partner is None or sim > best_sim:
                best_sim = sim
                best_partner = resume_skill
        pairs.append(SkillPair(jd_skill=jd_skill, resume_skill=best_partner, similarity=best_sim))
        total += best_sim
    return total / len(jd_skills), pairs, provider_id


def skill_score(
    profile_skills: Sequence[str],
    jd_skills: Sequence[str],
    provider: EmbeddingProvider,
) -> tuple[float, list[SkillPair]]:
    """Mean over required skills of the best non-negative cosine match.

    The argmax partner is recorded per required skill; ties go to the
    lexicographically smallest resume skill.
    """
    score, pairs, _ = _skill_score_impl(profile_skills, jd_skills, provider)
    return score, pairs


def experience_score(candidate_months: int, required_months: int) -> float:
    """Capped ratio; a job with no requirement scores 1.0."""
    if candidate_months < 0 or required_months < 0:
        raise ValueError("months must be non-negative")
    if required_months == 0:
        return 1.0
    return min(1.0, candidate_months / required_months)


def education_score(candidate_level: int, required_level: int) -> float:
    """1.0 at or above the requirement, partial ratio credit below."""
    if not (0 <= candidate_level <= 4 and 0 <= required_level <= 4):
        raise ValueError("education ordinals must be in 0..4")
    if required_level == 0 or candidate_level >= required_level:
        return 1.0
    return candidate_level / required_level


def location_score(candidate_addresses: Sequence[str], jd_location: str | None) -> float:
    """1.0 when no location required, contained or fuzzy-matched; else 0.0."""
    if not jd_location or not jd_location.strip():
        return 1.0
    wanted = fold(jd_location.strip())
    for address in candidate_addresses:
        folded = fold(address)
        if wanted in folded:
            return 1.0
        if folded_similarity(address, jd_location) >= LOCATION_FUZZY_THRESHOLD:
            return 1.0
    return 0.0


def match(
    profile: ResumeProfile,
    jd: JobDescription,
    weights: WeightProfile,
    provider: EmbeddingProvider,
    candidate_id: str | None = None,
) -> MatchResult:
    """Score one candidate against one job with a full breakdown."""
    jd.validate()
    resume_skills = [m.canonical_id for m in profile.skills]
    raw_skills, pairs, provider_id = _skill_score_impl(resume_skills, jd.required_skills, provider)
    raw_experience = experience_score(profile.experience_months, jd.min_experience_months)
    raw_education = education_score(int(profile.education), int(jd.required_education))
    raw_location = location_score(profile.contact.addresses, jd.location)

    breakdown = (
        CriterionScore.of(Criterion.SKILLS, raw_skills, weights.skills),
        CriterionScore.of(Criterion.EXPERIENCE, raw_experience, weights.experience),
        CriterionScore.of(Criterion.EDUCATION, raw_education, weights.education),
        CriterionScore.of(Criterion.LOCATION, raw_location, weights.location),
    )
    # Clamp the last-ulp overshoot when weights sum to 1 +/- 1e-16; the
    # contribution identity stays within the 1e-9 tolerance.
    total = min(1.0, max(0.0, sum(score.contribution for score in breakdown)))
    return MatchResult(
        candidate_id=candidate_id if candidate_id is not None else profile.source_id,
        job_id=jd.id,
        total=total,
        breakdown=breakdown,
        provider_id=provider_id,
        skill_pairs=tuple(pairs),
    )


def score_all(
    profiles: Sequence[tuple[str, ResumeProfile]],
    jd: JobDescription,
    weights: WeightProfile,
    provider: EmbeddingProvider,
) -> list[MatchResult]:
    """Match every (candidate_id, profile) pair against the job."""
    return [match(p, jd, weights, provider, candidate_id=cid) for cid, p in profiles]


def build_ranking(job_id: str, results: Sequence[MatchResult], k: int | None = None) -> Ranking:
    """Sort by total descending, ties by candidate id ascending; truncate to k."""
    ordered = sorted(results, key=lambda r: (-r.total, r.candidate_id))
    if k is not None:
        ordered = ordered[: max(0, k)]
    return Ranking(job_id=job_id, entries=tuple((r.candidate_id, r.total) for r in ordered))


def rank(
    profiles: Sequence[ResumeProfile],
    jd: JobDescription,
    weights: WeightProfile,
    provider: EmbeddingProvider,
) -> Ranking:
    """Rank profiles (identified by their source_id) against the job."""
    results = score_all([(p.source_id, p) for p in profiles], jd, weights, provider)
    return build_ranking(jd.id, results)


def explain(
    result: MatchResult,
    jd: JobDescription,
    profile: ResumeProfile,
    candidate_id: str | None = None,
) -> Explanation:
    """Decompose a match result for auditing; inputs must be the originals."""
    if result.job_id != jd.id:
        raise InconsistentInputs(f"result is for job {result.job_id}, not {jd.id}")
    expected = candidate_id if candidate_id is not None else profile.source_id
    if result.candidate_id != expected:
        raise InconsistentInputs(
            f"result is for candidate {result.candidate_id}, not {expected}"
        )
    if [p.jd_skill for p in result.skill_pairs] != list(jd.required_skills):
        raise InconsistentInputs("result skill pairs do not match the job description")
    matched = tuple(
        p for p in result.skill_pairs if p.similarity >= EXPLANATION_MATCH_THRESHOLD and p.resume_skill
    )
    unmatched = tuple(
        p.jd_skill
        for p in result.skill_pairs
        if not (p.similarity >= EXPLANATION_MATCH_THRESHOLD and p.resume_skill)
    )
    by_criterion = {c.criterion: c for c in result.breakdown}
    return Explanation(
        job_id=result.job_id,
        candidate_id=result.candidate_id,
        total=result.total,
        matched=matched,
        unmatched_jd_skills=unmatched,
        experience_note=(
            profile.experience_months,
            jd.min_experience_months,
            by_criterion[Criterion.EXPERIENCE].raw,
        ),
        education_note=(int(profile.education), int(jd.required_education)),
        location_note=by_criterion[Criterion.LOCATION].raw >= 1.0,
        contributions=result.breakdown,
    )
