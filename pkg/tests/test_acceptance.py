"""Acceptance suite: one test per shipping criterion, each printing a
PASS/FAIL line. Runs entirely offline on the built-in embedding provider;
no UI, no external services.

Criteria:
  corpus-extraction   per-field accuracy >= 0.90, skill F1 >= 0.90, < 30 s
  fuzzy-oracle        similarity == 1 - DP distance / max length, >= 1000 pairs
  experience-oracle   totals == month-set-union cardinality, >= 500 lists
  embedding           unit norm +/- 1e-6 (>= 1000 strings), golden vectors
                      bit-stable, cosine symmetry / self-similarity
  scoring             total in [0,1], contributions sum (>= 1000 triples),
                      monotonicity (>= 200), rescale-invariant ranking grid
  top-k               gold candidate in top 3 in >= 9/10 scenarios for every
                      0.1-grid weight profile with skills weight >= 0.3, < 60 s
  service-contract    endpoint schemas, store round-trip, crash atomicity
"""

import itertools
import json
import random
import string
import time

import numpy as np
import pytest
from fastapi.testclient import TestClient

from conftest import GOLDEN_VECTORS
from oracles import dp_levenshtein, dp_similarity, month_set
from resumatch.embed import HashedTrigramProvider, cosine
from resumatch.extract import (
    CandidateName,
    ContactInfo,
    DateInterval,
    EducationLevel,
    ResumeProfile,
    SkillMention,
    levenshtein,
    similarity,
    total_experience_months,
)
from resumatch.match import JobDescription, WeightProfile, match, rank
from resumatch.service.api import create_app
from resumatch.service.config import AppConfig
from resumatch.service.pipeline import ResumePipeline
from resumatch.service.store import InMemoryStore


def report(name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f"  ({detail})" if detail else ""
    print(f"ACCEPTANCE {name}: {status}{suffix}")
    assert ok, f"{name}: {detail}"


class CachingProvider:
    """Memoizes embeddings so grid sweeps exercise match() cheaply."""

    def __init__(self):
        self.inner = HashedTrigramProvider()
        self.id = self.inner.id
        self.dimension = self.inner.dimension
        self._cache = {}

    def embed(self, text):
        if text not in self._cache:
            self._cache[text] = self.inner.embed(text)
        return self._cache[text]

    def embed_many(self, texts):
        return [self.embed(t) for t in texts]


def make_profile(skills, months, education, addresses, source_id):
    return ResumeProfile(
        name=CandidateName("Fixture Person", 0.9),
        contact=ContactInfo(addresses=tuple(addresses)),
        skills=tuple(
            SkillMention(surface=s, canonical_id=s, similarity=1.0, span=(0, 1)) for s in skills
        ),
        education=EducationLevel(education),
        experience_months=months,
        languages=(),
        source_id=source_id,
    )


# --- corpus extraction -------------------------------------------------------


def test_acceptance_corpus_extraction(corpus_dir, manifest):
    started = time.monotonic()
    pipeline = ResumePipeline(clock=tuple(manifest["clock"]))
    resumes = manifest["resumes"]
    n = len(resumes)
    hits = {"emails": 0, "phones": 0, "education": 0, "experience_months": 0}
    tp = fp = fn = 0
    for entry in resumes:
        profile = pipeline.parse_file(corpus_dir / entry["file"])
        hits["emails"] += list(profile.contact.emails) == entry["emails"]
        hits["phones"] += list(profile.contact.phones) == entry["phones"]
        hits["education"] += int(profile.education) == entry["education"]
        hits["experience_months"] += profile.experience_months == entry["experience_months"]
        got = set(profile.skill_ids())
        want = set(entry["skills"])
        tp += len(got & want)
        fp += len(got - want)
        fn += len(want - got)
    elapsed = time.monotonic() - started

    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    accuracies = {field: count / n for field, count in hits.items()}

    two_column = sum(1 for r in resumes if r["layout"] == "pdf-two-column")
    ok = (
        n >= 30
        and two_column >= 5
        and all(acc >= 0.90 for acc in accuracies.values())
        and f1 >= 0.90
        and elapsed < 30.0
    )
    detail = (
        f"n={n}, two-column={two_column}, "
        + ", ".join(f"{k}={v:.3f}" for k, v in accuracies.items())
        + f", skillF1={f1:.3f}, runtime={elapsed:.2f}s"
    )
    report("corpus-extraction", ok, detail)


# --- fuzzy oracle ------------------------------------------------------------


def test_acceptance_fuzzy_oracle():
    rng = random.Random(424242)
    alphabet = string.ascii_lowercase + "éèàç -"
    checked = 0
    ok = True
    for _ in range(1100):
        a = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 40)))
        b = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 40)))
        expected_distance = dp_levenshtein(a, b)
        if levenshtein(a, b) != expected_distance:
            ok = False
            break
        if similarity(a, b) != dp_similarity(a, b):
            ok = False
            break
        checked += 1
    report("fuzzy-oracle", ok and checked >= 1000, f"pairs={checked}, exact equality")


# --- experience oracle ---------------------------------------------------------


def test_acceptance_experience_oracle():
    rng = random.Random(515151)
    checked = 0
    ok = True
    for _ in range(520):
        intervals = []
        for _ in range(rng.randint(0, 50)):
            start = rng.randint(1990 * 12, 2030 * 12)
            end = start + rng.randint(0, 72)
            intervals.append(
                DateInterval((start // 12, start % 12 + 1), (end // 12, end % 12 + 1))
            )
        expected = len(month_set([(i.start, i.end) for i in intervals]))
        if total_experience_months(intervals) != expected:
            ok = False
            break
        checked += 1
    report("experience-oracle", ok and checked >= 500, f"lists={checked}, exact equality")


# --- embedding invariants -------------------------------------------------------


def test_acceptance_embedding_invariants():
    provider = HashedTrigramProvider()
    rng = random.Random(616161)
    alphabet = string.ascii_letters + "éèàçü 0123456789+#.-"
    norms_ok = True
    checked = 0
    for _ in range(1000):
        text = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 60)))
        if not text.strip():
            text = "x"
        vector = provider.embed(text)
        if abs(float(np.linalg.norm(vector.values)) - 1.0) > 1e-6:
            norms_ok = False
            break
        checked += 1

    golden = json.loads(GOLDEN_VECTORS.read_text("utf-8"))
    golden_ok = golden["provider_id"] == provider.id and len(golden["inputs"]) == 10
    for text, frozen in zip(golden["inputs"], golden["vectors"]):
        run1 = [float(v) for v in provider.embed(text).values]
        run2 = [float(v) for v in provider.embed(text).values]
        if run1 != run2 or run1 != frozen:
            golden_ok = False
            break

    v = provider.embed("kubernetes")
    w = provider.embed("apache kafka")
    cosine_ok = cosine(v, w) == cosine(w, v) and cosine(v, v) >= 1 - 1e-6

    ok = norms_ok and checked >= 1000 and golden_ok and cosine_ok
    report(
        "embedding",
        ok,
        f"norms={checked} within 1e-6, golden=10 bit-stable, symmetry+self-sim ok",
    )


# --- scoring properties -----------------------------------------------------------


SKILL_POOL = [
    "python", "linux", "docker", "react", "sql", "rust", "go", "kafka",
    "spark", "excel", "terraform", "graphql",
]
CITY_POOL = ["Alger", "Oran", "Constantine", "Annaba", "Tlemcen"]


def random_case(rng):
    profile = make_profile(
        skills=rng.sample(SKILL_POOL, rng.randint(0, 6)),
        months=rng.randint(0, 240),
        education=rng.randint(0, 4),
        addresses=[rng.choice(CITY_POOL)] if rng.random() < 0.8 else [],
        source_id=f"c{rng.randint(0, 10**9):09d}",
    )
    jd = JobDescription(
        id="job",
        title="t",
        required_skills=tuple(rng.sample(SKILL_POOL, rng.randint(1, 5))),
        min_experience_months=rng.randint(0, 120),
        required_education=EducationLevel(rng.randint(0, 4)),
        location=rng.choice(CITY_POOL) if rng.random() < 0.7 else None,
    )
    weights = WeightProfile.normalized(
        rng.uniform(0, 5), rng.uniform(0, 5), rng.uniform(0, 5), rng.uniform(0, 5)
    )
    return profile, jd, weights


def test_acceptance_scoring_properties():
    provider = CachingProvider()
    rng = random.Random(717171)

    decompose_ok = True
    for _ in range(1000):
        profile, jd, weights = random_case(rng)
        result = match(profile, jd, weights, provider)
        in_range = 0.0 <= result.total <= 1.0
        sums = abs(sum(c.contribution for c in result.breakdown) - result.total) <= 1e-9
        raws = all(0.0 <= c.raw <= 1.0 for c in result.breakdown)
        if not (in_range and sums and raws):
            decompose_ok = False
            break

    monotonic_ok = True
    checked_monotonic = 0
    while checked_monotonic < 200:
        profile, jd, weights = random_case(rng)
        missing = [s for s in jd.required_skills if s not in [m.canonical_id for m in profile.skills]]
        if not missing:
            continue
        before = match(profile, jd, weights, provider).total
        grown = make_profile(
            skills=[m.canonical_id for m in profile.skills] + [missing[0]],
            months=profile.experience_months,
            education=int(profile.education),
            addresses=profile.contact.addresses,
            source_id=profile.source_id,
        )
        after = match(grown, jd, weights, provider).total
        if after < before - 1e-12:
            monotonic_ok = False
            break
        checked_monotonic += 1

    rescale_ok = True
    profiles = [
        make_profile(
            skills=rng.sample(SKILL_POOL, rng.randint(0, 6)),
            months=rng.randint(0, 120),
            education=rng.randint(0, 4),
            addresses=[rng.choice(CITY_POOL)],
            source_id=f"c{i:02d}",
        )
        for i in range(10)
    ]
    jd = JobDescription(
        id="grid-job",
        title="t",
        required_skills=("python", "docker", "sql"),
        min_experience_months=36,
        required_education=EducationLevel.BACHELOR,
        location="Alger",
    )
    grid_points = 0
    for s, e, d in itertools.product(range(11), repeat=3):
        l = 10 - s - e - d
        if l < 0 or (s, e, d, l) == (0, 0, 0, 0):
            continue
        base = WeightProfile.normalized(s, e, d, l)
        scaled = WeightProfile.normalized(7 * s, 7 * e, 7 * d, 7 * l)
        order_base = [c for c, _ in rank(profiles, jd, base, provider).entries]
        order_scaled = [c for c, _ in rank(profiles, jd, scaled, provider).entries]
        if order_base != order_scaled:
            rescale_ok = False
            break
        grid_points += 1

    ok = decompose_ok and monotonic_ok and rescale_ok
    report(
        "scoring",
        ok,
        f"triples=1000, monotonic={checked_monotonic}, rescale grid={grid_points} profiles",
    )


# --- top-k protocol ------------------------------------------------------------


def test_acceptance_top_k_protocol():
    started = time.monotonic()
    provider = CachingProvider()
    rng = random.Random(818181)
    pool = SKILL_POOL + ["ansible", "redis", "pandas", "mongodb"]

    scenarios = []
    for scenario_index in range(10):
        jd_skills = tuple(rng.sample(pool, rng.randint(4, 6)))
        location = rng.choice(CITY_POOL)
        required_months = rng.randint(24, 48)
        required_education = rng.randint(2, 3)
        jd = JobDescription(
            id=f"scenario-{scenario_index}",
            title="t",
            required_skills=jd_skills,
            min_experience_months=required_months,
            required_education=EducationLevel(required_education),
            location=location,
        )
        gold = make_profile(
            skills=list(jd_skills),
            months=required_months + rng.randint(6, 36),
            education=min(4, required_education + rng.randint(0, 1)),
            addresses=[f"Quartier des Oliviers, {location}"],
            source_id="gold",
        )
        distractors = []
        for d in range(20):
            overlap = rng.sample(jd_skills, rng.randint(0, 2))
            extra = rng.sample([s for s in pool if s not in jd_skills], rng.randint(2, 5))
            distractors.append(
                make_profile(
                    skills=overlap + extra,
                    months=rng.randint(0, required_months),
                    education=rng.randint(0, 4),
                    addresses=[rng.choice(CITY_POOL)] if rng.random() < 0.5 else [],
                    source_id=f"d{d:02d}",
                )
            )
        scenarios.append((jd, [gold] + distractors))

    grid = [
        WeightProfile.normalized(s, e, d, 10 - s - e - d)
        for s, e, d in itertools.product(range(11), repeat=3)
        if s >= 3 and s + e + d <= 10
    ]
    assert len(grid) == 120

    worst = 10
    for weights in grid:
        in_top3 = 0
        for jd, candidates in scenarios:
            ranking = rank(candidates, jd, weights, provider)
            top3 = [cid for cid, _ in ranking.entries[:3]]
            in_top3 += "gold" in top3
        worst = min(worst, in_top3)
    elapsed = time.monotonic() - started

    ok = worst >= 9 and elapsed < 60.0
    report(
        "top-k",
        ok,
        f"worst-case gold-in-top3 = {worst}/10 over {len(grid)} weight profiles, "
        f"runtime={elapsed:.2f}s",
    )


# --- service contract -----------------------------------------------------------


def test_acceptance_service_contract(corpus_dir, manifest, tmp_path, monkeypatch):
    from test_api import validate
    import resumatch.service.store as store_mod
    from resumatch.service.store import CandidateRecord, DirectoryStore

    app = create_app(
        config=AppConfig(),
        store=InMemoryStore(),
        pipeline=ResumePipeline(clock=tuple(manifest["clock"])),
    )
    client = TestClient(app)

    schema_ok = True
    validate(client.get("/health").json(), "health.schema.json")
    candidate_ids = []
    for entry in manifest["resumes"][:3]:
        response = client.post(
            "/resumes",
            files={"file": (entry["file"], (corpus_dir / entry["file"]).read_bytes())},
        )
        schema_ok &= response.status_code == 201
        validate(response.json(), "candidate_record.schema.json")
        candidate_ids.append(response.json()["candidate_id"])
    job_response = client.post(
        "/jobs",
        json={
            "title": "Backend Developer",
            "required_skills": ["Python", "Docker"],
            "min_experience_months": 12,
            "required_education": 2,
        },
    )
    schema_ok &= job_response.status_code == 201
    validate(job_response.json(), "job_record.schema.json")
    job_id = job_response.json()["job_id"]

    ranking_response = client.get(f"/jobs/{job_id}/ranking", params={"k": 2})
    schema_ok &= ranking_response.status_code == 200
    validate(ranking_response.json(), "ranking.schema.json")

    explanation_response = client.get(
        f"/jobs/{job_id}/candidates/{candidate_ids[0]}/explanation"
    )
    schema_ok &= explanation_response.status_code == 200
    validate(explanation_response.json(), "explanation.schema.json")

    # directory store round-trip
    store = DirectoryStore(tmp_path)
    record = CandidateRecord(
        candidate_id="rt1",
        profile=ResumePipeline(clock=tuple(manifest["clock"])).parse_file(
            corpus_dir / manifest["resumes"][0]["file"]
        ),
        source_file=manifest["resumes"][0]["file"],
        ingested_at="2025-06-01T00:00:00+00:00",
        pipeline_version="0.1.0",
    )
    store.put_candidate(record)
    round_trip_ok = DirectoryStore(tmp_path).get_candidate("rt1") == record

    # crash injection between write and rename
    def crash(src, dst):
        raise OSError("simulated crash")

    monkeypatch.setattr(store_mod.os, "replace", crash)
    try:
        store.put_candidate(
            CandidateRecord(
                candidate_id="rt1",
                profile=record.profile,
                source_file="changed.txt",
                ingested_at="2026-01-01T00:00:00+00:00",
                pipeline_version="x",
            )
        )
        crashed = False
    except OSError:
        crashed = True
    monkeypatch.undo()
    atomicity_ok = crashed and DirectoryStore(tmp_path).get_candidate("rt1") == record

    ok = schema_ok and round_trip_ok and atomicity_ok
    report(
        "service-contract",
        ok,
        f"schemas ok={schema_ok}, round-trip={round_trip_ok}, atomicity={atomicity_ok}",
    )
