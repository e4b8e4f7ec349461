"""Source documents and positioned text blocks.

A block is one visually contiguous run of text with page index and a
bounding box in typographic points, origin at the top-left of the page.
Reading order is assigned later by the column analyzer.
"""

import json
from dataclasses import dataclass
from enum import Enum

from ..errors import EmptyDocument, MalformedDocument

ORDER_UNASSIGNED = -1

# Synthesized geometry for plain-text documents: one full-width row per line.
PLAIN_TEXT_PAGE_WIDTH = 612.0
PLAIN_TEXT_LINE_HEIGHT = 12.0


class DocumentKind(str, Enum):
    PDF_TEXT = "pdf-text"
    PLAIN_TEXT = "plain-text"
    EXTERNAL_PROVIDER = "external-provider"


@dataclass(frozen=True)
class SourceDocument:
    id: str
    data: bytes
    kind: DocumentKind

    def __post_init__(self):
        if self.kind == DocumentKind.PDF_TEXT and not self.data.startswith(b"%PDF"):
            raise MalformedDocument(f"{self.id}: pdf-text document lacks the PDF magic header")
        if self.kind == DocumentKind.PLAIN_TEXT:
            try:
                self.data.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise MalformedDocument(f"{self.id}: plain-text document is not valid UTF-8") from exc

    @classmethod
    def from_bytes(cls, doc_id: str, data: bytes) -> "SourceDocument":
        """Sniff the document kind from its leading bytes."""
        if data.startswith(b"%PDF"):
            return cls(doc_id, data, DocumentKind.PDF_TEXT)
        try:
            data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedDocument(f"{doc_id}: undecodable bytes") from exc
        return cls(doc_id, data, DocumentKind.PLAIN_TEXT)


@dataclass(frozen=True)
class TextBlock:
    page: int
    bbox: tuple[float, float, float, float]  # x0, y0, x1, y1; origin top-left
    text: str
    order: int = ORDER_UNASSIGNED

    def __post_init__(self):
        x0, y0, x1, y1 = self.bbox
        if not (x0 < x1 and y0 < y1):
            raise ValueError(f"degenerate bbox {self.bbox}")
        if not self.text.strip():
            raise ValueError("block text is empty after trimming")

    @property
    def x_center(self) -> float:
        return (self.bbox[0] + self.bbox[2]) / 2.0


def extract_blocks(doc: SourceDocument) -> list[TextBlock]:
    """Turn a source document into unordered text blocks.

    Plain text yields one block per non-blank line with synthesized
    full-width geometry; PDFs go through the block extractor. Raises
    EmptyDocument when nothing is extractable, which signals the caller
    to route the file to an external layout provider.
    """
    if doc.kind == DocumentKind.PLAIN_TEXT:
        blocks = _plain_text_blocks(doc.data.decode("utf-8"))
    elif doc.kind == DocumentKind.PDF_TEXT:
        from .pdf import extract_pdf_blocks

        blocks = extract_pdf_blocks(doc.data)
    else:
        raise ValueError(
            "external-provider documents carry no raw bytes; use blocks_from_provider_json"
        )
    if not blocks:
        raise EmptyDocument(f"{doc.id}: no extractable text")
    return blocks


def _plain_text_blocks(text: str) -> list[TextBlock]:
    blocks = []
    for index, line in enumerate(text.splitlines()):
        if not line.strip():
            continue
        top = index * PLAIN_TEXT_LINE_HEIGHT
        blocks.append(
            TextBlock(
                page=0,
                bbox=(0.0, top, PLAIN_TEXT_PAGE_WIDTH, top + PLAIN_TEXT_LINE_HEIGHT),
                text=line,
            )
        )
    return blocks


def blocks_from_provider_json(payload: str | bytes) -> list[TextBlock]:
    """Provider slot: accept pre-extracted blocks as JSON.

    Expected shape: [{"page": int, "bbox": [x0, y0, x1, y1], "text": str}, ...].
    This is the integration point for an external layout service; the
    provider's output replaces native extraction for the document.
    """
    try:
        items = json.loads(payload)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise MalformedDocument(f"provider payload is not valid JSON: {exc}") from exc
    if not isinstance(items, list):
        raise MalformedDocument("provider payload must be a JSON array")
    blocks = []
    for i, item in enumerate(items):
        try:
            bbox = item["bbox"]
            blocks.append(
                TextBlock(
                    page=int(item["page"]),
                    bbox=(float(bbox[0]), float(bbox[1]), float(bbox[2]), float(bbox[3])),
                    text=str(item["text"]),
                )
            )
        except (KeyError, TypeError, IndexError, ValueError) as exc:
            raise MalformedDocument(f"provider block #{i} is malformed: {exc}") from exc
    return blocks
