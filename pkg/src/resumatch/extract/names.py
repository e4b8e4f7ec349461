"""Candidate name extraction.

The original design relies on a trained name classifier; that model and
its training data are not shippable, so the scoring step is a pluggable
contract (NameScorer) with a deterministic default that combines
gazetteer lookups with layout heuristics. Swap in a learned scorer by
implementing the protocol.
"""

import re
from dataclasses import dataclass, field
from typing import Protocol

from ..ingest.normalize import normalize_text
from .contact import EMAIL_RE, PHONE_RE, MAX_PHONE_DIGITS, MIN_PHONE_DIGITS
from .fuzzy import MATCH_THRESHOLD, fold, similarity_at_least
from .lexicons import SkillLexicon, load_gazetteer, load_header_lexicon
from .sections import match_header

MAX_NAME_BLOCKS = 10
MAX_NAME_TOKENS = 4


@dataclass(frozen=True)
class CandidateName:
    value: str
    confidence: float

    @classmethod
    def none(cls) -> "CandidateName":
        return cls(value="", confidence=0.0)


@dataclass(frozen=True)
class NameCandidate:
    text: str
    tokens: tuple[str, ...]
    block_order: int


class NameScorer(Protocol):
    def score(self, candidate: NameCandidate) -> float:
        """Map a candidate line to [0, 1]; higher means more name-like."""
        ...


@dataclass
class GazetteerNameScorer:
    """Default scorer: gazetteer hits + casing shape + position bonus
    - a penalty when the line looks like a skill or job title.

    score = clamp01(0.5 * gazetteer_fraction
                    + 0.25 * shape_fraction
                    + 0.25 * position_bonus
                    - 0.3 * skill_penalty)
    where position_bonus = 1 / (1 + block_order).
    """

    given: frozenset[str]
    family: frozenset[str]
    skill_surfaces: tuple[str, ...] = ()

    W_GAZETTEER: float = field(default=0.5, repr=False)
    W_SHAPE: float = field(default=0.25, repr=False)
    W_POSITION: float = field(default=0.25, repr=False)
    SKILL_PENALTY: float = field(default=0.3, repr=False)

    @classmethod
    def bundled(cls, lexicon: SkillLexicon | None = None) -> "GazetteerNameScorer":
        given, family = load_gazetteer()
        surfaces: tuple[str, ...] = ()
        if lexicon is not None:
            surfaces = tuple(key for key, _ in lexicon.folded_surfaces())
        return cls(given=given, family=family, skill_surfaces=surfaces)

    def _is_skill_like(self, folded_line: str, folded_tokens: tuple[str, ...]) -> bool:
        for surface in self.skill_surfaces:
            if similarity_at_least(folded_line, surface, MATCH_THRESHOLD):
                return True
            for token in folded_tokens:
                if similarity_at_least(token, surface, MATCH_THRESHOLD):
                    return True
        return False

    def score(self, candidate: NameCandidate) -> float:
        tokens = candidate.tokens
        if not tokens:
            return 0.0
        folded_tokens = tuple(fold(t) for t in tokens)
        known = self.given | self.family
        gazetteer = sum(1 for t in folded_tokens if t in known) / len(tokens)
        shape = sum(1 for t in tokens if _name_shaped(t)) / len(tokens)
        position = 1.0 / (1.0 + candidate.block_order)
        penalty = (
            self.SKILL_PENALTY
            if self._is_skill_like(fold(candidate.text), folded_tokens)
            else 0.0
        )
        raw = (
            self.W_GAZETTEER * gazetteer
            + self.W_SHAPE * shape
            + self.W_POSITION * position
            - penalty
        )
        return min(1.0, max(0.0, raw))


def _name_shaped(token: str) -> bool:
    """Title-case or all-caps alphabetic token."""
    if not token.isalpha():
        return False
    return token.isupper() or (token[0].isupper() and token[1:].islower())


def _has_phone(line: str) -> bool:
    for m in PHONE_RE.finditer(line):
        digits = re.sub(r"\D", "", m.group(0))
        if MIN_PHONE_DIGITS <= len(digits) <= MAX_PHONE_DIGITS:
            return True
    return False


def candidate_lines(
    blocks, headers: dict[str, tuple[str, ...]] | None = None
) -> list[NameCandidate]:
    """Name candidates from the first blocks in reading order.

    A line qualifies when it has 1..4 tokens, no digits, is not a section
    header, and contains neither an email nor a phone number.
    """
    if headers is None:
        headers = load_header_lexicon()
    ordered = sorted(blocks, key=lambda b: b.order)[:MAX_NAME_BLOCKS]
    candidates = []
    for block in ordered:
        for line in normalize_text(block.text).split("\n"):
            line = line.strip()
            if not line:
                continue
            tokens = tuple(line.split())
            if not 1 <= len(tokens) <= MAX_NAME_TOKENS:
                continue
            if any(ch.isdigit() for ch in line):
                continue
            if match_header(line, headers) is not None:
                continue
            if EMAIL_RE.search(line) or _has_phone(line):
                continue
            candidates.append(NameCandidate(text=line, tokens=tokens, block_order=block.order))
    return candidates


def extract_name(
    blocks,
    scorer: NameScorer,
    headers: dict[str, tuple[str, ...]] | None = None,
) -> CandidateName:
    """Highest-scoring candidate line wins; no candidates means no name."""
    candidates = candidate_lines(blocks, headers)
    if not candidates:
        return CandidateName.none()
    scored = [(scorer.score(c), -c.block_order, c) for c in candidates]
    best_score, _, best = max(scored, key=lambda item: item[:2])
    if best_score <= 0.0:
        return CandidateName.none()
    return CandidateName(value=best.text, confidence=best_score)
