"""The shared fuzzy metric against the brute-force DP oracle."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import dp_levenshtein, dp_similarity
from resumatch.extract.fuzzy import (
    MATCH_THRESHOLD,
    bounded_levenshtein,
    fold,
    levenshtein,
    similarity,
    similarity_at_least,
    strip_accents,
)

WORDS = st.text(alphabet="abcdefghijklmnopqrstuvwxyzéèàç -", max_size=40)


def test_fold_strips_accents_and_case():
    assert fold("Développeur") == "developpeur"
    assert fold("ÉTUDES") == "etudes"
    assert strip_accents("Gérant") == "Gerant"


# Frozen values computed with the DP oracle (tests/oracles.py).
@pytest.mark.parametrize(
    "a,b,distance",
    [
        ("experiance", "experience", 1),
        ("data analysis", "data analytics", 2),
        ("oran", "alger", 5),
        ("", "abc", 3),
        ("kitten", "sitting", 3),
    ],
)
def test_frozen_distances(a, b, distance):
    assert dp_levenshtein(a, b) == distance  # the oracle itself
    assert levenshtein(a, b) == distance


def test_header_typo_reaches_threshold():
    # one edit over length 10 -> 0.9
    assert similarity("experiance", "experience") == pytest.approx(0.9)
    assert similarity("experiance", "experience") >= MATCH_THRESHOLD


def test_data_analytics_is_a_fuzzy_match():
    # distance 2 over max length 14 -> ~0.857, above the 0.85 threshold
    assert similarity("data analysis", "data analytics") == pytest.approx(1 - 2 / 14)
    assert similarity_at_least("data analysis", "data analytics", MATCH_THRESHOLD)


def test_location_pair_is_far():
    assert similarity("oran", "alger") == 0.0


@given(WORDS, WORDS)
@settings(max_examples=300)
def test_similarity_matches_dp_oracle(a, b):
    assert levenshtein(a, b) == dp_levenshtein(a, b)
    assert similarity(a, b) == dp_similarity(a, b)


@given(WORDS, WORDS, st.sampled_from([0.7, 0.85, 0.9]))
@settings(max_examples=300)
def test_threshold_screen_agrees_with_exact_similarity(a, b, threshold):
    assert similarity_at_least(a, b, threshold) == (dp_similarity(a, b) >= threshold - 1e-12)


@given(WORDS, WORDS, st.integers(min_value=0, max_value=8))
@settings(max_examples=300)
def test_bounded_levenshtein_caps_correctly(a, b, limit):
    exact = dp_levenshtein(a, b)
    bounded = bounded_levenshtein(a, b, limit)
    if exact <= limit:
        assert bounded == exact
    else:
        assert bounded == limit + 1


@given(WORDS)
def test_similarity_identity(a):
    assert similarity(a, a) == 1.0
