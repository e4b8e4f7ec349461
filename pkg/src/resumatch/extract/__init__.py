"""Structured information extraction from normalized resume text."""

from .contact import ContactInfo, extract_contact, find_emails, find_phones, normalize_phone
from .dates import PRESENT, DateInterval, parse_date_intervals, total_experience_months
from .education import EducationLevel, extract_education_level
from .fuzzy import (
    MATCH_THRESHOLD,
    fold,
    folded_similarity,
    levenshtein,
    similarity,
    similarity_at_least,
    strip_accents,
)
from .lexicons import (
    SkillEntry,
    SkillLexicon,
    load_degree_lexicon,
    load_gazetteer,
    load_header_lexicon,
    load_language_lexicon,
)
from .names import (
    CandidateName,
    GazetteerNameScorer,
    NameCandidate,
    NameScorer,
    extract_name,
)
from .profile import ResumeProfile, build_profile, dedupe_skills, extract_languages
from .sections import Section, SectionLabel, match_header, segment, sections_text
from .skills import SkillMention, extract_skills

__all__ = [
    "ContactInfo",
    "extract_contact",
    "find_emails",
    "find_phones",
    "normalize_phone",
    "PRESENT",
    "DateInterval",
    "parse_date_intervals",
    "total_experience_months",
    "EducationLevel",
    "extract_education_level",
    "MATCH_THRESHOLD",
    "fold",
    "folded_similarity",
    "levenshtein",
    "similarity",
    "similarity_at_least",
    "strip_accents",
    "SkillEntry",
    "SkillLexicon",
    "load_degree_lexicon",
    "load_gazetteer",
    "load_header_lexicon",
    "load_language_lexicon",
    "CandidateName",
    "GazetteerNameScorer",
    "NameCandidate",
    "NameScorer",
    "extract_name",
    "ResumeProfile",
    "build_profile",
    "dedupe_skills",
    "extract_languages",
    "Section",
    "SectionLabel",
    "match_header",
    "segment",
    "sections_text",
    "SkillMention",
    "extract_skills",
]
