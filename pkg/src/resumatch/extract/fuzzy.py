"""Normalized edit-distance similarity shared by every lexicon matcher.

All fuzzy comparisons in the pipeline (section headers, skills, degrees,
locations) go through the same metric: Levenshtein distance over
accent-stripped, case-folded strings, normalized by the longer length.
"""

import unicodedata

MATCH_THRESHOLD = 0.85


def strip_accents(s: str) -> str:
    """Drop combining marks, mapping e.g. 'é' to 'e'."""
    decomposed = unicodedata.normalize("NFD", s)
    return "".join(ch for ch in decomposed if unicodedata.category(ch) != "Mn")


def fold(s: str) -> str:
    """Canonical comparison form: accent-stripped and case-folded."""
    return strip_accents(s).casefold()


def levenshtein(a: str, b: str) -> int:
    """Edit distance (unit insert/delete/substitute costs)."""
    if a == b:
        return 0
    if not a:
        return len(b)
    if not b:
        return len(a)
    if len(a) < len(b):
        a, b = b, a
    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        current = [i]
        for j, cb in enumerate(b, 1):
            cost = 0 if ca == cb else 1
            current.append(min(current[-1] + 1, previous[j] + 1, previous[j - 1] + cost))
        previous = current
    return previous[-1]


def similarity(a: str, b: str) -> float:
    """1 - levenshtein/max-length; 1.0 when both strings are empty."""
    longest = max(len(a), len(b))
    if longest == 0:
        return 1.0
    return 1.0 - levenshtein(a, b) / longest


def folded_similarity(a: str, b: str) -> float:
    return similarity(fold(a), fold(b))


def bounded_levenshtein(a: str, b: str, limit: int) -> int:
    """Edit distance capped at limit; returns limit + 1 when exceeded.

    Uses a diagonal band of half-width `limit`, which is sufficient because
    any alignment straying further already costs more than `limit`.
    """
    if limit < 0:
        return limit + 1 if a != b else 0
    if len(a) < len(b):
        a, b = b, a
    m, n = len(a), len(b)
    big = limit + 1
    if m - n > limit:
        return big
    if n == 0:
        return m if m <= limit else big
    previous = [j if j <= limit else big for j in range(n + 1)]
    for i in range(1, m + 1):
        lo = max(1, i - limit)
        hi = min(n, i + limit)
        current = [big] * (n + 1)
        if i - limit <= 0:
            current[0] = i
        ca = a[i - 1]
        row_min = big
        for j in range(lo, hi + 1):
            cost = 0 if ca == b[j - 1] else 1
            value = min(current[j - 1] + 1, previous[j] + 1, previous[j - 1] + cost)
            current[j] = value
            if value < row_min:
                row_min = value
        if row_min > limit:
            return big
        previous = current
    return previous[n] if previous[n] <= limit else big


def max_edits(length: int, threshold: float = MATCH_THRESHOLD) -> int:
    """Largest edit count still reaching `threshold` for strings of max length `length`."""
    return int((1.0 - threshold) * length + 1e-9)


def similarity_at_least(a: str, b: str, threshold: float = MATCH_THRESHOLD) -> bool:
    """Cheap screen for similarity(a, b) >= threshold."""
    longest = max(len(a), len(b))
    if longest == 0:
        return True
    allowed = max_edits(longest, threshold)
    if abs(len(a) - len(b)) > allowed:
        return False
    return bounded_levenshtein(a, b, allowed) <= allowed
