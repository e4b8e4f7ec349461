"""Date interval parsing and total experience computation.

Recognized interval forms (EN and FR month names including 3-letter
abbreviations): "Jan 2020 - Mar 2022", "01/2020 - 03/2022", "2019-2021",
and open intervals ending in Present/Current/Aujourd'hui/Présent. Year-only
endpoints expand to January (starts) or December (ends) with their
month-known precision flag cleared. The current month is injected by the
caller, never read from the system clock here.

Unparseable fragments are logged and skipped; resume dates are noisy and
partial extraction beats rejection.
"""

import logging
import re
from dataclasses import dataclass

from .fuzzy import fold

logger = logging.getLogger(__name__)

YearMonth = tuple[int, int]

# Sentinel for an open interval before clock resolution.
PRESENT: YearMonth = (9999, 12)

_MONTHS = {
    # English full + abbreviated
    "january": 1, "february": 2, "march": 3, "april": 4, "may": 5, "june": 6,
    "july": 7, "august": 8, "september": 9, "october": 10, "november": 11,
    "december": 12,
    "jan": 1, "feb": 2, "mar": 3, "apr": 4, "jun": 6, "jul": 7, "aug": 8,
    "sep": 9, "sept": 9, "oct": 10, "nov": 11, "dec": 12,
    # French full + abbreviated (accent-stripped)
    "janvier": 1, "fevrier": 2, "mars": 3, "avril": 4, "mai": 5, "juin": 6,
    "juillet": 7, "aout": 8, "septembre": 9, "octobre": 10, "novembre": 11,
    "decembre": 12,
    "janv": 1, "fevr": 2, "fev": 2, "avr": 4, "juil": 7,
}

# Longest-first alternation so full names win over abbreviated prefixes;
# lookarounds keep "mai" from firing inside "maintenance".
_MONTH_ALT = "|".join(sorted(_MONTHS, key=len, reverse=True))
_MONTH_TOKEN = rf"(?<![a-z])(?:{_MONTH_ALT})(?![a-z])\.?"
_YEAR = r"(?:19|20)\d{2}"


def _date_atom(tag: str) -> str:
    return (
        rf"(?:(?P<mname{tag}>{_MONTH_TOKEN})\s+(?P<myear{tag}>{_YEAR})"
        rf"|(?P<mm{tag}>\d{{1,2}})\s*/\s*(?P<mmyear{tag}>{_YEAR})"
        rf"|(?P<yonly{tag}>{_YEAR}))"
    )


_PRESENT_RE = r"(?:present|current|aujourd'?\s?hui)"
_INTERVAL_RE = re.compile(
    _date_atom("1") + r"\s*[-–—]\s*" + rf"(?:(?P<present>{_PRESENT_RE})|{_date_atom('2')})",
    re.IGNORECASE,
)


@dataclass(frozen=True)
class DateInterval:
    start: YearMonth
    end: YearMonth
    start_month_known: bool = True
    end_month_known: bool = True

    @property
    def is_open(self) -> bool:
        return self.end == PRESENT

    def resolve(self, clock: YearMonth) -> "DateInterval":
        if not self.is_open:
            return self
        return DateInterval(self.start, clock, self.start_month_known, True)


def _parse_atom(m: re.Match, tag: str) -> tuple[YearMonth, bool] | None:
    """((year, month), month_known) for one endpoint, or None when invalid."""
    name = m.group(f"mname{tag}")
    if name:
        month = _MONTHS.get(fold(name).rstrip("."))
        if month is None:
            return None
        return (int(m.group(f"myear{tag}")), month), True
    mm = m.group(f"mm{tag}")
    if mm:
        month = int(mm)
        if not 1 <= month <= 12:
            return None
        return (int(m.group(f"mmyear{tag}")), month), True
    year = m.group(f"yonly{tag}")
    if year:
        return (int(year), 0), False  # month filled in by the caller
    return None


def parse_date_intervals(section_text: str, clock: YearMonth) -> list[DateInterval]:
    """All date intervals found in the text, resolved against `clock`."""
    work = fold(section_text)
    intervals = []
    for m in _INTERVAL_RE.finditer(work):
        fragment = m.group(0)
        start_atom = _parse_atom(m, "1")
        if start_atom is None:
            logger.debug("skipping unparseable date fragment %r", fragment)
            continue
        (start_year, start_month), start_known = start_atom
        if not start_known:
            start_month = 1
        start = (start_year, start_month)

        if m.group("present"):
            end, end_known = clock, True
        else:
            end_atom = _parse_atom(m, "2")
            if end_atom is None:
                logger.debug("skipping unparseable date fragment %r", fragment)
                continue
            (end_year, end_month), end_known = end_atom
            if not end_known:
                end_month = 12
            end = (end_year, end_month)

        if start > end:
            logger.debug("skipping inverted date interval %r", fragment)
            continue
        intervals.append(
            DateInterval(start=start, end=end, start_month_known=start_known, end_month_known=end_known)
        )
    return intervals


def _month_index(ym: YearMonth) -> int:
    return ym[0] * 12 + (ym[1] - 1)


def total_experience_months(intervals: list[DateInterval]) -> int:
    """Total distinct months covered; overlapping or adjacent intervals merge.

    Both endpoint months count, so Jan 2020..Mar 2022 is 27 months.
    """
    spans = []
    for interval in intervals:
        if interval.is_open:
            raise ValueError("intervals must be resolved before totalling")
        spans.append((_month_index(interval.start), _month_index(interval.end)))
    spans.sort()
    total = 0
    current: tuple[int, int] | None = None
    for start, end in spans:
        if current is None:
            current = (start, end)
        elif start <= current[1] + 1:
            current = (current[0], max(current[1], end))
        else:
            total += current[1] - current[0] + 1
            current = (start, end)
    if current is not None:
        total += current[1] - current[0] + 1
    return total
