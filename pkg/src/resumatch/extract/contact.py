"""Contact information extraction: emails, phones, addresses."""

import re
from dataclasses import dataclass

from .sections import Section, SectionLabel, sections_text

EMAIL_RE = re.compile(r"[A-Za-z0-9._%+-]+@[A-Za-z0-9-]+(?:\.[A-Za-z0-9-]+)*\.[A-Za-z]{2,}")

# Optional +, then digits with separators from {space, -, ., (, )}; the
# candidate is kept when it contains 8..15 digits overall. Separators
# deliberately exclude newlines so numbers never span lines.
PHONE_RE = re.compile(r"\+?\d(?:[\d \t().-]*\d)?")

_YEAR_RANGE_RE = re.compile(r"(?:19|20)\d{2}[ \t.-]*(?:19|20)\d{2}")

_ADDRESS_LABEL_RE = re.compile(r"^\s*(?:adresse|address)\s*[:\-]\s*(.+)$", re.IGNORECASE | re.MULTILINE)
_STREET_WORDS = (
    "rue",
    "avenue",
    "boulevard",
    "street",
    "road",
    "cité",
    "cite",
    "quartier",
    "wilaya",
)

MIN_PHONE_DIGITS = 8
MAX_PHONE_DIGITS = 15


@dataclass(frozen=True)
class ContactInfo:
    emails: tuple[str, ...] = ()
    phones: tuple[str, ...] = ()
    addresses: tuple[str, ...] = ()


def normalize_phone(raw: str) -> str:
    """Keep a leading + and the digits; separators are dropped."""
    digits = re.sub(r"\D", "", raw)
    return ("+" if raw.lstrip().startswith("+") else "") + digits


def find_emails(text: str) -> list[str]:
    seen = set()
    out = []
    for m in EMAIL_RE.finditer(text):
        key = m.group(0).casefold()
        if key not in seen:
            seen.add(key)
            out.append(m.group(0))
    return out


def find_phones(text: str) -> list[str]:
    # Mask emails first so digits inside addresses are not picked up.
    masked = EMAIL_RE.sub(" ", text)
    seen = set()
    out = []
    for m in PHONE_RE.finditer(masked):
        candidate = m.group(0)
        if _YEAR_RANGE_RE.fullmatch(candidate.strip()):
            continue  # "2019 - 2021" is a date range, not a phone
        normalized = normalize_phone(candidate)
        digit_count = len(normalized.lstrip("+"))
        if MIN_PHONE_DIGITS <= digit_count <= MAX_PHONE_DIGITS and normalized not in seen:
            seen.add(normalized)
            out.append(normalized)
    return out


def find_addresses(text: str, contact_text: str) -> list[str]:
    seen = set()
    out = []

    def add(value: str) -> None:
        value = value.strip()
        key = value.casefold()
        if value and key not in seen:
            seen.add(key)
            out.append(value)

    for m in _ADDRESS_LABEL_RE.finditer(text):
        add(m.group(1))
    for line in contact_text.split("\n"):
        stripped = line.strip()
        if not stripped or "@" in stripped:
            continue
        lowered = stripped.casefold()
        if any(word in lowered for word in _STREET_WORDS):
            add(stripped)
        elif "," in stripped and not re.search(r"\d{4,}", stripped) and 2 <= len(stripped.split()) <= 8:
            # "Alger Centre, Algérie" style place lines inside the contact block
            if not _ADDRESS_LABEL_RE.match(stripped):
                add(stripped)
    return out


def extract_contact(sections: list[Section], text: str) -> ContactInfo:
    """Emails, phones and addresses; dedicated sections win over full text."""
    contact_text = sections_text(sections, text, SectionLabel.CONTACT, SectionLabel.SUMMARY)

    emails = find_emails(contact_text) or find_emails(text)
    phones = find_phones(contact_text) or find_phones(text)
    addresses = find_addresses(text, contact_text)
    return ContactInfo(emails=tuple(emails), phones=tuple(phones), addresses=tuple(addresses))
