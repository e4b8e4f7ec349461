"""Skill mention extraction via fuzzy lexicon matching.

Candidate spans are token n-grams (n = 1..3) taken from the Skills
section (whole text when no Skills section exists). A span matches a
lexicon entry when the folded strings reach similarity >= 0.85 against
the canonical form or an alias; exact alias/canonical hits score 1.0.
Overlaps resolve longest-span-first, then higher similarity, then
leftmost.
"""

import re
from dataclasses import dataclass

from .fuzzy import MATCH_THRESHOLD, fold, max_edits, similarity, similarity_at_least
from .lexicons import SkillEntry, SkillLexicon
from .sections import Section, SectionLabel

MAX_NGRAM = 3

# Segments stop n-grams from crossing list punctuation; slashes separate
# tokens but keep adjacency so "CI/CD" still forms the "ci cd" bigram.
_SEGMENT_SPLIT_RE = re.compile(r"[,;:|()\[\]{}\"•·»«]|\n")
_TOKEN_RE = re.compile(r"[^\s/]+")


@dataclass(frozen=True)
class SkillMention:
    surface: str
    canonical_id: str
    similarity: float
    span: tuple[int, int]


@dataclass(frozen=True)
class _Token:
    text: str
    start: int
    end: int


def _tokenize(text: str, base_offset: int = 0) -> list[_Token]:
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        raw = m.group(0)
        start = m.start()
        # Trim punctuation that is list decoration, keeping things like
        # ".NET", "C++", "C#" and interior dots of "node.js" intact.
        lead_trimmed = raw.lstrip("'’\"“”‘")
        start += len(raw) - len(lead_trimmed)
        trimmed = lead_trimmed.rstrip(".,!?'’\"“”‘")
        if not trimmed:
            continue
        tokens.append(_Token(trimmed, base_offset + start, base_offset + start + len(trimmed)))
    return tokens


def _segments(text: str, base_offset: int = 0):
    pos = 0
    for m in _SEGMENT_SPLIT_RE.finditer(text):
        if m.start() > pos:
            yield text[pos : m.start()], base_offset + pos
        pos = m.end()
    if pos < len(text):
        yield text[pos:], base_offset + pos


def _candidate_spans(text: str, base_offset: int) -> list[tuple[str, int, int]]:
    """(folded n-gram, start, end) for every 1..3-token window."""
    spans = []
    for segment, seg_offset in _segments(text, base_offset):
        tokens = _tokenize(segment, seg_offset)
        for i in range(len(tokens)):
            for n in range(1, MAX_NGRAM + 1):
                if i + n > len(tokens):
                    break
                window = tokens[i : i + n]
                folded = " ".join(fold(t.text) for t in window)
                spans.append((folded, window[0].start, window[-1].end))
    return spans


def _best_entry(folded: str, lexicon: SkillLexicon) -> tuple[SkillEntry, float] | None:
    exact = lexicon.exact_lookup(folded)
    if exact is not None:
        return exact, 1.0
    best: tuple[SkillEntry, float] | None = None
    length = len(folded)
    for surface, entry in lexicon.folded_surfaces():
        if abs(len(surface) - length) > max_edits(max(len(surface), length)):
            continue
        if not similarity_at_least(folded, surface, MATCH_THRESHOLD):
            continue
        score = similarity(folded, surface)
        if best is None or score > best[1] or (score == best[1] and entry.id < best[0].id):
            best = (entry, score)
    return best


def extract_skills(
    sections: list[Section], text: str, lexicon: SkillLexicon
) -> list[SkillMention]:
    """All resolved skill mentions, in span order."""
    skill_sections = [s for s in sections if s.label == SectionLabel.SKILLS]
    scopes = (
        [(s.slice(text), s.span[0]) for s in skill_sections]
        if skill_sections
        else [(text, 0)]
    )

    candidates: list[tuple[SkillMention, int]] = []
    for scope_text, offset in scopes:
        for folded, start, end in _candidate_spans(scope_text, offset):
            hit = _best_entry(folded, lexicon)
            if hit is None:
                continue
            entry, score = hit
            mention = SkillMention(
                surface=text[start:end],
                canonical_id=entry.id,
                similarity=score,
                span=(start, end),
            )
            candidates.append((mention, end - start))

    # Longest span first, ties by similarity then leftmost position.
    candidates.sort(key=lambda item: (-item[1], -item[0].similarity, item[0].span[0]))
    chosen: list[SkillMention] = []
    taken: list[tuple[int, int]] = []
    for mention, _ in candidates:
        s, e = mention.span
        if any(s < te and e > ts for ts, te in taken):
            continue
        taken.append((s, e))
        chosen.append(mention)
    chosen.sort(key=lambda m: m.span)
    return chosen
