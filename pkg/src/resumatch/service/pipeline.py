"""End-to-end resume processing: file bytes in, stored profile out."""

import datetime
import logging
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from .. import PIPELINE_VERSION
from ..extract import (
    GazetteerNameScorer,
    NameScorer,
    SkillLexicon,
    ResumeProfile,
    build_profile,
    extract_contact,
    extract_education_level,
    extract_languages,
    extract_name,
    extract_skills,
    load_degree_lexicon,
    load_header_lexicon,
    load_language_lexicon,
    parse_date_intervals,
    segment,
    sections_text,
)
from ..extract.dates import YearMonth
from ..extract.sections import SectionLabel
from ..ingest import (
    PLAIN_TEXT_PAGE_WIDTH,
    SourceDocument,
    extract_blocks,
    normalize_text,
    reading_order,
)
from .store import CandidateRecord, Store

logger = logging.getLogger(__name__)


def _lexicon_path(lexicon_dir: str | None, name: str) -> str | None:
    if lexicon_dir is None:
        return None
    candidate = Path(lexicon_dir) / name
    return str(candidate) if candidate.exists() else None


@dataclass
class ResumePipeline:
    """Holds the shared read-only lexicons and the injected clock.

    The lexicons are loaded once and never mutated, so one pipeline can
    process documents concurrently. `clock` fixes the (year, month) used
    to resolve open-ended date intervals; None means "now", resolved per
    call (tests inject a fixed value for determinism).
    """

    skill_lexicon: SkillLexicon = field(default_factory=SkillLexicon.load)
    headers: dict = field(default_factory=load_header_lexicon)
    degrees: dict = field(default_factory=load_degree_lexicon)
    languages: dict = field(default_factory=load_language_lexicon)
    name_scorer: NameScorer | None = None
    clock: YearMonth | None = None

    @classmethod
    def from_lexicon_dir(cls, lexicon_dir: str | None, clock: YearMonth | None = None) -> "ResumePipeline":
        return cls(
            skill_lexicon=SkillLexicon.load(_lexicon_path(lexicon_dir, "skills.json")),
            headers=load_header_lexicon(_lexicon_path(lexicon_dir, "headers.json")),
            degrees=load_degree_lexicon(_lexicon_path(lexicon_dir, "degrees.json")),
            languages=load_language_lexicon(_lexicon_path(lexicon_dir, "languages.json")),
            clock=clock,
        )

    def __post_init__(self):
        if self.name_scorer is None:
            self.name_scorer = GazetteerNameScorer.bundled(self.skill_lexicon)

    def _clock_now(self) -> YearMonth:
        if self.clock is not None:
            return self.clock
        today = datetime.date.today()
        return (today.year, today.month)

    def parse_bytes(self, data: bytes, doc_id: str) -> ResumeProfile:
        doc = SourceDocument.from_bytes(doc_id, data)
        blocks = extract_blocks(doc)
        ordered = reading_order(blocks, PLAIN_TEXT_PAGE_WIDTH)
        text = normalize_text("\n".join(b.text for b in ordered))
        sections = segment(text, self.headers)

        name = extract_name(ordered, self.name_scorer, self.headers)
        contact = extract_contact(sections, text)
        skills = extract_skills(sections, text, self.skill_lexicon)
        education = extract_education_level(sections, text, self.degrees)
        experience_scope = sections_text(sections, text, SectionLabel.EXPERIENCE) or text
        intervals = parse_date_intervals(experience_scope, clock=self._clock_now())
        languages = extract_languages(sections, text, self.languages)

        return build_profile(doc_id, name, contact, skills, education, intervals, languages)

    def parse_file(self, path: str | Path) -> ResumeProfile:
        path = Path(path)
        return self.parse_bytes(path.read_bytes(), doc_id=path.name)


def ingest_resume(path: str | Path, store: Store, pipeline: ResumePipeline) -> CandidateRecord:
    """Parse a resume file, persist the profile, and return the record.

    Each ingest mints a fresh candidate id; re-ingesting the same file
    yields a new record with identical profile content.
    """
    path = Path(path)
    profile = pipeline.parse_file(path)
    record = CandidateRecord(
        candidate_id=uuid.uuid4().hex,
        profile=profile,
        source_file=path.name,
        ingested_at=datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds"),
        pipeline_version=PIPELINE_VERSION,
    )
    store.put_candidate(record)
    logger.info("ingested %s as candidate %s", path.name, record.candidate_id)
    return record
