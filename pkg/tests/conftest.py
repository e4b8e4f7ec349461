import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))  # for `oracles`

from resumatch.embed import HashedTrigramProvider
from resumatch.extract import SkillLexicon
from resumatch.service.pipeline import ResumePipeline

CORPUS_DIR = Path(__file__).resolve().parent / "fixtures" / "corpus"
SCHEMA_DIR = Path(__file__).resolve().parent.parent / "schemas"
GOLDEN_VECTORS = Path(__file__).resolve().parent / "fixtures" / "golden_vectors.json"


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return CORPUS_DIR


@pytest.fixture(scope="session")
def manifest() -> dict:
    return json.loads((CORPUS_DIR / "manifest.json").read_text("utf-8"))


@pytest.fixture(scope="session")
def pipeline(manifest) -> ResumePipeline:
    return ResumePipeline(clock=tuple(manifest["clock"]))


@pytest.fixture(scope="session")
def skill_lexicon() -> SkillLexicon:
    return SkillLexicon.load()


@pytest.fixture(scope="session")
def provider() -> HashedTrigramProvider:
    return HashedTrigramProvider()


def load_schema(name: str) -> dict:
    return json.loads((SCHEMA_DIR / name).read_text("utf-8"))
