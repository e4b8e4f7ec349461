"""Date interval parsing and experience totalling against the month-set oracle."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import month_set
from resumatch.extract import DateInterval, parse_date_intervals, total_experience_months

CLOCK = (2023, 6)


def test_english_month_names():
    intervals = parse_date_intervals("Jan 2020 - Mar 2022", clock=CLOCK)
    assert intervals == [DateInterval((2020, 1), (2022, 3))]


def test_year_only_expands_with_cleared_precision():
    intervals = parse_date_intervals("2019–2021", clock=CLOCK)
    assert len(intervals) == 1
    interval = intervals[0]
    assert interval.start == (2019, 1)
    assert interval.end == (2021, 12)
    assert interval.start_month_known is False
    assert interval.end_month_known is False


def test_french_present_marker_resolves_to_clock():
    intervals = parse_date_intervals("Mars 2021 – Aujourd'hui", clock=CLOCK)
    assert intervals == [DateInterval((2021, 3), (2023, 6))]


def test_present_and_current_variants():
    for marker in ["Present", "Current", "Présent", "aujourd'hui"]:
        intervals = parse_date_intervals(f"Sep 2022 - {marker}", clock=CLOCK)
        assert intervals == [DateInterval((2022, 9), (2023, 6))], marker


def test_numeric_form():
    intervals = parse_date_intervals("03/2019 - 11/2020", clock=CLOCK)
    assert intervals == [DateInterval((2019, 3), (2020, 11))]


def test_mixed_endpoint_forms():
    intervals = parse_date_intervals("June 2015 - 2018", clock=CLOCK)
    assert intervals == [
        DateInterval((2015, 6), (2018, 12), start_month_known=True, end_month_known=False)
    ]


def test_unparseable_fragments_skipped():
    assert parse_date_intervals("13/2019 - 14/2020", clock=CLOCK) == []
    assert parse_date_intervals("Blorp 2019 - Glorp 2020", clock=CLOCK) == []
    assert parse_date_intervals("no dates at all", clock=CLOCK) == []


def test_inverted_interval_skipped():
    assert parse_date_intervals("2022 - 2019", clock=CLOCK) == []


def test_multiple_intervals_in_order():
    text = "Dev, X\nJan 2018 - Dec 2018\nOps, Y\nFévr. 2019 - Aujourd'hui"
    intervals = parse_date_intervals(text, clock=CLOCK)
    assert intervals == [
        DateInterval((2018, 1), (2018, 12)),
        DateInterval((2019, 2), (2023, 6)),
    ]


def test_month_words_do_not_fire_inside_other_words():
    # "maintenance" contains "mai"; the year range must still parse year-only
    intervals = parse_date_intervals("maintenance 2019 - 2021", clock=CLOCK)
    assert intervals == [DateInterval((2019, 1), (2021, 12), False, False)]


# --- total_experience_months ----------------------------------------------


def month_tuples(interval: DateInterval):
    return (interval.start, interval.end)


def test_27_month_interval():
    intervals = [DateInterval((2020, 1), (2022, 3))]
    assert len(month_set([month_tuples(i) for i in intervals])) == 27  # oracle
    assert total_experience_months(intervals) == 27


def test_overlapping_intervals_merge():
    intervals = [DateInterval((2020, 1), (2020, 6)), DateInterval((2020, 4), (2020, 12))]
    assert len(month_set([month_tuples(i) for i in intervals])) == 12
    assert total_experience_months(intervals) == 12


def test_empty_list_is_zero():
    assert total_experience_months([]) == 0


def test_unresolved_interval_rejected():
    from resumatch.extract.dates import PRESENT

    with pytest.raises(ValueError):
        total_experience_months([DateInterval((2020, 1), PRESENT)])


def test_adjacent_intervals_merge_without_double_count():
    intervals = [DateInterval((2020, 1), (2020, 3)), DateInterval((2020, 4), (2020, 6))]
    assert total_experience_months(intervals) == 6


@st.composite
def interval_lists(draw):
    count = draw(st.integers(min_value=0, max_value=50))
    intervals = []
    for _ in range(count):
        y1 = draw(st.integers(min_value=1990, max_value=2030))
        m1 = draw(st.integers(min_value=1, max_value=12))
        length = draw(st.integers(min_value=0, max_value=80))
        start_index = y1 * 12 + m1 - 1
        end_index = start_index + length
        y2, m2 = divmod(end_index, 12)
        intervals.append(DateInterval((y1, m1), (y2, m2 + 1)))
    return intervals


@given(interval_lists())
@settings(max_examples=300)
def test_total_equals_month_set_cardinality(intervals):
    expected = len(month_set([month_tuples(i) for i in intervals]))
    assert total_experience_months(intervals) == expected


def test_total_equals_oracle_on_seeded_random_lists():
    rng = random.Random(1234)
    for _ in range(200):
        intervals = []
        for _ in range(rng.randint(0, 50)):
            start = rng.randint(1990 * 12, 2030 * 12)
            end = start + rng.randint(0, 60)
            intervals.append(
                DateInterval((start // 12, start % 12 + 1), (end // 12, end % 12 + 1))
            )
        expected = len(month_set([month_tuples(i) for i in intervals]))
        assert total_experience_months(intervals) == expected
