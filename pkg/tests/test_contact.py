"""Email, phone and address extraction."""

import re

from hypothesis import given, settings
from hypothesis import strategies as st

from resumatch.extract import extract_contact, find_phones, normalize_phone, segment


def contact_for(text):
    return extract_contact(segment(text), text)


def test_email_and_phone_side_by_side():
    info = contact_for("mail: jane.doe@mail.dz / +213 661 23 45 67")
    assert list(info.emails) == ["jane.doe@mail.dz"]
    assert list(info.phones) == ["+213661234567"]


def test_absence_yields_empty_contact():
    info = contact_for("no at sign and no digit runs here")
    assert info.emails == () and info.phones == () and info.addresses == ()


def test_parenthesized_phone():
    # strip-non-digits oracle: "(0661) 23-45-67" has exactly 10 digits
    digits = re.sub(r"\D", "", "(0661) 23-45-67")
    assert len(digits) == 10
    info = contact_for("(0661) 23-45-67")
    assert list(info.phones) == ["0661234567"]


def test_contact_section_searched_before_full_text():
    text = (
        "Contact\nEmail: real@mail.dz\nTel: 0550 11 22 33\n"
        "Experience\nother@elsewhere.com 0799 99 88 77"
    )
    info = contact_for(text)
    assert list(info.emails) == ["real@mail.dz"]
    assert list(info.phones) == ["0550112233"]


def test_full_text_fallback_when_contact_section_empty():
    text = "Contact\nnothing here\nOther\nreach me at me@host.org"
    info = contact_for(text)
    assert list(info.emails) == ["me@host.org"]


def test_year_ranges_are_not_phones():
    assert find_phones("worked from 2019 - 2021 then 2021-2024") == []


def test_phone_never_spans_lines():
    # 4 digits per line; only a match crossing the newline would reach 8
    assert find_phones("12 34\n56 78") == []


def test_duplicates_removed_first_occurrence_kept():
    text = "a@b.cd then A@B.cd and 0550112233, +ignored, 0550 11 22 33"
    info = contact_for(text)
    assert list(info.emails) == ["a@b.cd"]
    assert list(info.phones) == ["0550112233"]


def test_labeled_address_extracted():
    info = contact_for("Adresse : 12 Rue Didouche Mourad, Alger")
    assert list(info.addresses) == ["12 Rue Didouche Mourad, Alger"]


def test_normalize_phone_keeps_plus():
    assert normalize_phone("+213 661-23-45-67") == "+213661234567"
    assert normalize_phone("(0661) 23 45 67") == "0661234567"


PHONE_TEXT = st.text(alphabet="0123456789 ()-.+\nabc@", max_size=80)


@given(PHONE_TEXT)
@settings(max_examples=300)
def test_extracted_phones_have_8_to_15_digits(text):
    for phone in find_phones(text):
        digits = phone.lstrip("+")
        assert digits.isdigit()
        assert 8 <= len(digits) <= 15
