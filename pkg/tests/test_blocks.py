"""Source documents and block extraction."""

import json

import pytest

from resumatch.errors import EmptyDocument, MalformedDocument
from resumatch.ingest import (
    ORDER_UNASSIGNED,
    DocumentKind,
    SourceDocument,
    TextBlock,
    blocks_from_provider_json,
    extract_blocks,
)


def test_plain_text_one_block_per_line():
    doc = SourceDocument("d1", b"Hello\nWorld", DocumentKind.PLAIN_TEXT)
    blocks = extract_blocks(doc)
    assert [b.text for b in blocks] == ["Hello", "World"]
    assert all(b.page == 0 for b in blocks)
    assert all(b.order == ORDER_UNASSIGNED for b in blocks)
    # line geometry preserves vertical order
    assert blocks[0].bbox[1] < blocks[1].bbox[1]


def test_blank_lines_are_skipped():
    doc = SourceDocument("d2", "un\n\n   \ndeux".encode(), DocumentKind.PLAIN_TEXT)
    assert [b.text for b in extract_blocks(doc)] == ["un", "deux"]


def test_empty_stream_raises_empty_document():
    doc = SourceDocument("d3", b"", DocumentKind.PLAIN_TEXT)
    with pytest.raises(EmptyDocument):
        extract_blocks(doc)


def test_undecodable_bytes_raise_malformed():
    with pytest.raises(MalformedDocument):
        SourceDocument.from_bytes("d4", b"\xff\xfe\x00broken\x80")


def test_pdf_kind_requires_magic_header():
    with pytest.raises(MalformedDocument):
        SourceDocument("d5", b"not a pdf", DocumentKind.PDF_TEXT)


def test_sniffing_prefers_pdf_magic():
    assert SourceDocument.from_bytes("d6", b"%PDF-1.4 junk").kind == DocumentKind.PDF_TEXT
    assert SourceDocument.from_bytes("d7", b"just text").kind == DocumentKind.PLAIN_TEXT


def test_block_invariants_enforced():
    with pytest.raises(ValueError):
        TextBlock(page=0, bbox=(10, 10, 10, 20), text="x")  # x0 == x1
    with pytest.raises(ValueError):
        TextBlock(page=0, bbox=(0, 0, 10, 10), text="   ")  # blank text


def test_provider_slot_parses_block_json():
    payload = json.dumps(
        [
            {"page": 0, "bbox": [10, 10, 100, 22], "text": "From provider"},
            {"page": 1, "bbox": [10, 10, 100, 22], "text": "Second page"},
        ]
    )
    blocks = blocks_from_provider_json(payload)
    assert [b.text for b in blocks] == ["From provider", "Second page"]
    assert blocks[1].page == 1


@pytest.mark.parametrize(
    "payload",
    ["{", "{}", '[{"page": 0}]', '[{"page": 0, "bbox": [1, 2, 3], "text": "x"}]'],
)
def test_provider_slot_rejects_malformed(payload):
    with pytest.raises(MalformedDocument):
        blocks_from_provider_json(payload)


def test_external_provider_kind_has_no_native_extraction():
    doc = SourceDocument("d8", b"", DocumentKind.EXTERNAL_PROVIDER)
    with pytest.raises(ValueError):
        extract_blocks(doc)
