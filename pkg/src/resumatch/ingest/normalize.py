"""Cleanup of extracted resume text into a stable, normalized form.

The output contract: NFC-composed Unicode, no control characters other
than newline, no zero-width characters, common UTF-8-as-Latin-1/cp1252
mojibake repaired, at most one consecutive space, no trailing whitespace
on any line. Normalization is idempotent.
"""

import re
import unicodedata

# Characters whose UTF-8 bytes, misread as cp1252 or latin-1, produce the
# classic double-encoding artifacts ("é" -> "Ã©"). The repair table is a
# closed, deterministic lookup built from this list.
_REPAIRABLE = (
    "àâäæçèéêëîïìíñòóôöœùúûüÿ"
    "ÀÂÄÆÇÈÉÊËÎÏÌÍÑÒÓÔÖŒÙÚÛÜŸ"
    "’‘“”«»…–—€°·•"
)


def _build_mojibake_table() -> dict[str, str]:
    table: dict[str, str] = {}
    for ch in _REPAIRABLE:
        raw = ch.encode("utf-8")
        for codec in ("cp1252", "latin-1"):
            try:
                key = raw.decode(codec)
            except UnicodeDecodeError:
                continue
            if len(key) >= 2 and key != ch:
                table.setdefault(key, ch)
    return table


_MOJIBAKE = _build_mojibake_table()
_MOJIBAKE_RE = re.compile(
    "|".join(re.escape(k) for k in sorted(_MOJIBAKE, key=len, reverse=True))
)
_MULTI_SPACE_RE = re.compile(r" {2,}")
_TRAILING_SPACE_RE = re.compile(r" +(\n|$)")


def _repair_mojibake(s: str) -> str:
    # Iterate to a fixpoint: each substitution strictly shrinks the string,
    # and repeated application keeps the result stable even for text that
    # was double-encoded more than once.
    while True:
        fixed = _MOJIBAKE_RE.sub(lambda m: _MOJIBAKE[m.group(0)], s)
        if fixed == s:
            return s
        s = fixed


def normalize_text(raw: str) -> str:
    """Normalize raw extracted text; see module docstring for the contract."""
    s = _repair_mojibake(raw)
    s = s.replace("\r\n", "\n").replace("\r", "\n")
    kept: list[str] = []
    for ch in s:
        if ch == "\n":
            kept.append(ch)
            continue
        if ch == "\t":
            kept.append(" ")
            continue
        category = unicodedata.category(ch)
        if category == "Zs":
            kept.append(" ")
        elif category in ("Cc", "Cf"):
            # Drops zero-width characters, BOM, soft hyphen and stray controls.
            continue
        else:
            kept.append(ch)
    s = unicodedata.normalize("NFC", "".join(kept))
    # NFC can compose a base letter with a stray combining mark into a new
    # precomposed character, so repair once more to stay idempotent.
    s = _repair_mojibake(s)
    s = _MULTI_SPACE_RE.sub(" ", s)
    s = _TRAILING_SPACE_RE.sub(r"\1", s)
    return s
