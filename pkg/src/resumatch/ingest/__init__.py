"""Document ingestion: block extraction, reading order, text normalization."""

from .blocks import (
    ORDER_UNASSIGNED,
    PLAIN_TEXT_LINE_HEIGHT,
    PLAIN_TEXT_PAGE_WIDTH,
    DocumentKind,
    SourceDocument,
    TextBlock,
    blocks_from_provider_json,
    extract_blocks,
)
from .columns import (
    MIN_GUTTER_COVERAGE,
    MIN_GUTTER_WIDTH,
    ColumnAssignment,
    assign_columns,
    detect_columns,
    order_blocks,
    reading_order,
)
from .normalize import normalize_text

__all__ = [
    "ORDER_UNASSIGNED",
    "PLAIN_TEXT_LINE_HEIGHT",
    "PLAIN_TEXT_PAGE_WIDTH",
    "DocumentKind",
    "SourceDocument",
    "TextBlock",
    "blocks_from_provider_json",
    "extract_blocks",
    "MIN_GUTTER_COVERAGE",
    "MIN_GUTTER_WIDTH",
    "ColumnAssignment",
    "assign_columns",
    "detect_columns",
    "order_blocks",
    "reading_order",
    "normalize_text",
]
