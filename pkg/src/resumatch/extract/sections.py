"""Segmentation of normalized resume text into labeled sections.

A line is a section header when its accent-stripped, case-folded form
fuzzy-matches a bilingual header-lexicon variant at similarity >= 0.85.
Each section spans from its header line to the next header (or end of
text); any unheaded prefix is labeled Other.
"""

from dataclasses import dataclass
from enum import Enum

from .fuzzy import MATCH_THRESHOLD, fold, similarity, similarity_at_least
from .lexicons import load_header_lexicon

_MAX_HEADER_LENGTH = 40
_EDGE_PUNCT = " \t:;.•·*-–—_|"


class SectionLabel(str, Enum):
    CONTACT = "Contact"
    SUMMARY = "Summary"
    EDUCATION = "Education"
    EXPERIENCE = "Experience"
    SKILLS = "Skills"
    LANGUAGES = "Languages"
    OTHER = "Other"


@dataclass(frozen=True)
class Section:
    label: SectionLabel
    header: str
    span: tuple[int, int]  # character offsets into the normalized text

    def slice(self, text: str) -> str:
        return text[self.span[0] : self.span[1]]


def match_header(line: str, headers: dict[str, tuple[str, ...]]) -> tuple[SectionLabel, float] | None:
    """Best header-lexicon label for a line, or None below threshold."""
    candidate = fold(line.strip(_EDGE_PUNCT))
    if not candidate or len(candidate) > _MAX_HEADER_LENGTH:
        return None
    best: tuple[SectionLabel, float] | None = None
    for label, variants in headers.items():
        for variant in variants:
            if not similarity_at_least(candidate, variant, MATCH_THRESHOLD):
                continue
            score = similarity(candidate, variant)
            if best is None or score > best[1]:
                best = (SectionLabel(label), score)
    return best


def segment(text: str, headers: dict[str, tuple[str, ...]] | None = None) -> list[Section]:
    """Split normalized text into sections; always a partition of the text."""
    if headers is None:
        headers = load_header_lexicon()
    header_hits: list[tuple[int, str, SectionLabel]] = []  # (line start, line, label)
    offset = 0
    for line in text.split("\n"):
        hit = match_header(line, headers)
        if hit is not None:
            header_hits.append((offset, line, hit[0]))
        offset += len(line) + 1

    if not header_hits:
        return [Section(SectionLabel.OTHER, "", (0, len(text)))]

    sections: list[Section] = []
    first_start = header_hits[0][0]
    if first_start > 0:
        sections.append(Section(SectionLabel.OTHER, "", (0, first_start)))
    for i, (start, line, label) in enumerate(header_hits):
        end = header_hits[i + 1][0] if i + 1 < len(header_hits) else len(text)
        sections.append(Section(label, line.strip(), (start, end)))
    return sections


def sections_text(sections: list[Section], text: str, *labels: SectionLabel) -> str:
    """Concatenated text of all sections with any of the given labels."""
    parts = [s.slice(text) for s in sections if s.label in labels]
    return "\n".join(parts)
