"""The unified structured resume schema and its assembly."""

from dataclasses import dataclass

from .contact import ContactInfo
from .dates import DateInterval, total_experience_months
from .education import EducationLevel
from .fuzzy import MATCH_THRESHOLD, similarity_at_least
from .lexicons import load_language_lexicon
from .names import CandidateName
from .sections import Section, SectionLabel, sections_text
from .skills import SkillMention, _candidate_spans


@dataclass(frozen=True)
class ResumeProfile:
    name: CandidateName
    contact: ContactInfo
    skills: tuple[SkillMention, ...]
    education: EducationLevel
    experience_months: int
    languages: tuple[str, ...]
    source_id: str

    def skill_ids(self) -> tuple[str, ...]:
        return tuple(m.canonical_id for m in self.skills)

    def to_dict(self) -> dict:
        return {
            "name": {"value": self.name.value, "confidence": self.name.confidence},
            "contact": {
                "emails": list(self.contact.emails),
                "phones": list(self.contact.phones),
                "addresses": list(self.contact.addresses),
            },
            "skills": [
                {
                    "surface": m.surface,
                    "canonical_id": m.canonical_id,
                    "similarity": m.similarity,
                    "span": list(m.span),
                }
                for m in self.skills
            ],
            "education": int(self.education),
            "experience_months": self.experience_months,
            "languages": list(self.languages),
            "source_id": self.source_id,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ResumeProfile":
        return cls(
            name=CandidateName(data["name"]["value"], data["name"]["confidence"]),
            contact=ContactInfo(
                emails=tuple(data["contact"]["emails"]),
                phones=tuple(data["contact"]["phones"]),
                addresses=tuple(data["contact"]["addresses"]),
            ),
            skills=tuple(
                SkillMention(
                    surface=m["surface"],
                    canonical_id=m["canonical_id"],
                    similarity=m["similarity"],
                    span=(m["span"][0], m["span"][1]),
                )
                for m in data["skills"]
            ),
            education=EducationLevel(data["education"]),
            experience_months=data["experience_months"],
            languages=tuple(data["languages"]),
            source_id=data["source_id"],
        )


def dedupe_skills(mentions: list[SkillMention]) -> tuple[SkillMention, ...]:
    """One mention per canonical id, keeping the highest similarity."""
    best: dict[str, SkillMention] = {}
    order: list[str] = []
    for mention in mentions:
        key = mention.canonical_id
        if key not in best:
            best[key] = mention
            order.append(key)
        elif mention.similarity > best[key].similarity:
            best[key] = mention
    return tuple(best[key] for key in order)


def extract_languages(
    sections: list[Section],
    text: str,
    languages: dict[str, tuple[str, ...]] | None = None,
) -> tuple[str, ...]:
    """Language codes found in the Languages section via the shared fuzzy matcher."""
    if languages is None:
        languages = load_language_lexicon()
    scope = sections_text(sections, text, SectionLabel.LANGUAGES)
    if not scope:
        return ()
    found: list[str] = []
    for folded, _start, _end in _candidate_spans(scope, 0):
        for code, variants in languages.items():
            if code in found:
                continue
            if any(similarity_at_least(folded, v, MATCH_THRESHOLD) for v in variants):
                found.append(code)
    return tuple(found)


def build_profile(
    doc_id: str,
    name: CandidateName,
    contact: ContactInfo,
    skills: list[SkillMention],
    education: EducationLevel,
    intervals: list[DateInterval],
    languages: tuple[str, ...],
) -> ResumeProfile:
    """Assemble extractor outputs into the unified schema."""
    return ResumeProfile(
        name=name,
        contact=contact,
        skills=dedupe_skills(skills),
        education=education,
        experience_months=total_experience_months(intervals),
        languages=languages,
        source_id=doc_id,
    )
