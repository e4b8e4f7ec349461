"""Highest education level from degree-lexicon fuzzy matching."""

from enum import IntEnum

from .fuzzy import MATCH_THRESHOLD, similarity_at_least
from .lexicons import load_degree_lexicon
from .sections import Section, SectionLabel, sections_text
from .skills import _candidate_spans


class EducationLevel(IntEnum):
    NONE = 0
    HIGH_SCHOOL = 1
    BACHELOR = 2
    MASTER = 3
    PHD = 4


def extract_education_level(
    sections: list[Section],
    text: str,
    degrees: dict[int, tuple[str, ...]] | None = None,
) -> EducationLevel:
    """Maximum degree ordinal found; Education sections first, whole text otherwise."""
    if degrees is None:
        degrees = load_degree_lexicon()
    scope = sections_text(sections, text, SectionLabel.EDUCATION) or text
    best = 0
    for folded, _start, _end in _candidate_spans(scope, 0):
        for level, variants in degrees.items():
            if level <= best:
                continue
            for variant in variants:
                if similarity_at_least(folded, variant, MATCH_THRESHOLD):
                    best = level
                    break
    return EducationLevel(best)
