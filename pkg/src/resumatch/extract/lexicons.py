"""Lexicon loading: skills, section headers, degrees, languages, gazetteer.

All lexicons are data files, not code. The bundled set under
resumatch/data is a starter vocabulary; deployments may point the loader
at their own files with the same shapes:

- skills: JSON array of {"id", "canonical", "aliases": [...]}
- headers/degrees/languages: JSON map of label -> list of variants
- gazetteer: plain text, one name token per line
"""

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .fuzzy import fold


def _bundled(name: str) -> str:
    return resources.files("resumatch.data").joinpath(name).read_text("utf-8")


@dataclass(frozen=True)
class SkillEntry:
    id: str
    canonical: str
    aliases: tuple[str, ...]

    def surfaces(self) -> tuple[str, ...]:
        return (self.canonical, *self.aliases)


@dataclass(frozen=True)
class SkillLexicon:
    entries: tuple[SkillEntry, ...]
    _exact: dict[str, SkillEntry] = field(repr=False, compare=False, default_factory=dict)
    _folded: tuple[tuple[str, SkillEntry], ...] = field(repr=False, compare=False, default=())

    def __post_init__(self):
        exact: dict[str, SkillEntry] = {}
        folded: list[tuple[str, SkillEntry]] = []
        for entry in self.entries:
            for surface in entry.surfaces():
                key = fold(surface)
                exact.setdefault(key, entry)
                folded.append((key, entry))
        object.__setattr__(self, "_exact", exact)
        object.__setattr__(self, "_folded", tuple(folded))

    def exact_lookup(self, folded_surface: str) -> SkillEntry | None:
        return self._exact.get(folded_surface)

    def folded_surfaces(self) -> tuple[tuple[str, SkillEntry], ...]:
        return self._folded

    def by_id(self, entry_id: str) -> SkillEntry | None:
        for entry in self.entries:
            if entry.id == entry_id:
                return entry
        return None

    @classmethod
    def from_json(cls, text: str) -> "SkillLexicon":
        raw = json.loads(text)
        entries = tuple(
            SkillEntry(id=item["id"], canonical=item["canonical"], aliases=tuple(item.get("aliases", ())))
            for item in raw
        )
        return cls(entries=entries)

    @classmethod
    def load(cls, path: str | Path | None = None) -> "SkillLexicon":
        if path is None:
            return cls.from_json(_bundled("skills.json"))
        return cls.from_json(Path(path).read_text("utf-8"))


def load_header_lexicon(path: str | Path | None = None) -> dict[str, tuple[str, ...]]:
    """Section label -> folded header variants, in declaration order."""
    text = _bundled("headers.json") if path is None else Path(path).read_text("utf-8")
    raw = json.loads(text)
    return {label: tuple(fold(v) for v in variants) for label, variants in raw.items()}


def load_degree_lexicon(path: str | Path | None = None) -> dict[int, tuple[str, ...]]:
    """Education ordinal -> folded degree variants."""
    text = _bundled("degrees.json") if path is None else Path(path).read_text("utf-8")
    raw = json.loads(text)
    return {int(level): tuple(fold(v) for v in variants) for level, variants in raw.items()}


def load_language_lexicon(path: str | Path | None = None) -> dict[str, tuple[str, ...]]:
    """Language code -> folded name variants."""
    text = _bundled("languages.json") if path is None else Path(path).read_text("utf-8")
    raw = json.loads(text)
    return {code: tuple(fold(v) for v in variants) for code, variants in raw.items()}


def load_gazetteer(
    given_path: str | Path | None = None, family_path: str | Path | None = None
) -> tuple[frozenset[str], frozenset[str]]:
    """Given and family name token sets, folded."""
    given_text = _bundled("given_names.txt") if given_path is None else Path(given_path).read_text("utf-8")
    family_text = _bundled("family_names.txt") if family_path is None else Path(family_path).read_text("utf-8")

    def tokens(text: str) -> frozenset[str]:
        out = set()
        for line in text.splitlines():
            line = line.strip()
            if line:
                out.update(fold(line).split())
        return frozenset(out)

    return tokens(given_text), tokens(family_text)
