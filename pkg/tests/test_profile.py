"""Profile assembly and the gold fixture round-trip."""

from resumatch.extract import (
    CandidateName,
    ContactInfo,
    DateInterval,
    EducationLevel,
    ResumeProfile,
    SkillMention,
    build_profile,
    dedupe_skills,
)


def test_all_empty_assembly():
    profile = build_profile(
        "doc-0",
        CandidateName.none(),
        ContactInfo(),
        [],
        EducationLevel.NONE,
        [],
        (),
    )
    assert profile.name.confidence == 0.0
    assert profile.experience_months == 0
    assert int(profile.education) == 0
    assert profile.skills == ()


def test_dedupe_keeps_max_similarity():
    mentions = [
        SkillMention("JavaScript", "javascript", 1.0, (0, 10)),
        SkillMention("Javascrpt", "javascript", 0.9, (20, 29)),
        SkillMention("Python", "python", 1.0, (40, 46)),
    ]
    deduped = dedupe_skills(mentions)
    assert [m.canonical_id for m in deduped] == ["javascript", "python"]
    assert deduped[0].similarity == 1.0


def test_dedupe_order_independent_of_which_wins():
    mentions = [
        SkillMention("Javascrpt", "javascript", 0.9, (0, 9)),
        SkillMention("JavaScript", "javascript", 1.0, (20, 30)),
    ]
    deduped = dedupe_skills(mentions)
    assert len(deduped) == 1
    assert deduped[0].similarity == 1.0


def test_experience_months_from_intervals():
    profile = build_profile(
        "doc-1",
        CandidateName("Jane Doe", 0.9),
        ContactInfo(),
        [],
        EducationLevel.BACHELOR,
        [DateInterval((2020, 1), (2022, 3))],
        ("en",),
    )
    assert profile.experience_months == 27


def test_first_corpus_fixture_matches_gold(pipeline, corpus_dir, manifest):
    entry = manifest["resumes"][0]
    profile = pipeline.parse_file(corpus_dir / entry["file"])
    assert profile.name.value == entry["name"]
    assert list(profile.contact.emails) == entry["emails"]
    assert list(profile.contact.phones) == entry["phones"]
    assert int(profile.education) == entry["education"]
    assert profile.experience_months == entry["experience_months"]
    assert set(profile.skill_ids()) == set(entry["skills"])
    assert sorted(profile.languages) == sorted(entry["languages"])


def test_profile_json_round_trip(pipeline, corpus_dir, manifest):
    entry = manifest["resumes"][0]
    profile = pipeline.parse_file(corpus_dir / entry["file"])
    assert ResumeProfile.from_dict(profile.to_dict()) == profile


def test_reingestion_is_deterministic(pipeline, corpus_dir, manifest):
    entry = manifest["resumes"][1]
    first = pipeline.parse_file(corpus_dir / entry["file"])
    second = pipeline.parse_file(corpus_dir / entry["file"])
    assert first == second
