"""Column detection and reading-order assignment.

A page is multi-column when a vertical gutter at least 18 points wide is
clear of text for at least 60% of the page's text height, with blocks
fully on both sides. The rule is a deterministic projection-gap test and
is invariant under uniform translation of all boxes.
"""

from dataclasses import dataclass, replace

from .blocks import TextBlock

MIN_GUTTER_WIDTH = 18.0
MIN_GUTTER_COVERAGE = 0.60


@dataclass(frozen=True)
class ColumnAssignment:
    """Maps block positions (indices into the analyzed list) to columns."""

    columns: dict[int, int]
    column_counts: dict[int, int]  # page -> number of columns

    def column_of(self, index: int) -> int:
        return self.columns[index]


def _interval_union_length(intervals: list[tuple[float, float]]) -> float:
    if not intervals:
        return 0.0
    intervals = sorted(intervals)
    total = 0.0
    cur_lo, cur_hi = intervals[0]
    for lo, hi in intervals[1:]:
        if lo > cur_hi:
            total += cur_hi - cur_lo
            cur_lo, cur_hi = lo, hi
        else:
            cur_hi = max(cur_hi, hi)
    total += cur_hi - cur_lo
    return total


def _covered_height(blocks: list[TextBlock], band_lo: float, band_hi: float) -> float:
    """Total text height of blocks that horizontally cross the open band."""
    crossing = [
        (b.bbox[1], b.bbox[3])
        for b in blocks
        if b.bbox[0] < band_hi and b.bbox[2] > band_lo
    ]
    return _interval_union_length(crossing)


def _best_gutter(blocks: list[TextBlock]) -> tuple[float, float] | None:
    """Strongest band qualifying as a gutter among these blocks, if any.

    A band qualifies when blocks crossing it cover at most 40% of the text
    height (the gutter "spans" at least 60%), it is at least 18 points
    wide, and some block lies fully on each side. Growing a band only adds
    crossing blocks, so for each left edge the widest witnessed band is
    found by monotone extension; the least-covered (then widest, then
    leftmost) candidate wins.
    """
    if len(blocks) < 2:
        return None
    text_height = max(b.bbox[3] for b in blocks) - min(b.bbox[1] for b in blocks)
    if text_height <= 0:
        return None
    limit = (1.0 - MIN_GUTTER_COVERAGE) * text_height + 1e-9
    xs = sorted({coord for b in blocks for coord in (b.bbox[0], b.bbox[2])})
    best: tuple[float, float, float, float] | None = None
    for i in range(len(xs) - 1):
        lo = xs[i]
        if not any(b.bbox[2] <= lo for b in blocks):
            continue
        hi = None
        for j in range(i + 1, len(xs)):
            if _covered_height(blocks, lo, xs[j]) > limit:
                break
            if xs[j] - lo >= MIN_GUTTER_WIDTH and any(b.bbox[0] >= xs[j] for b in blocks):
                hi = xs[j]
        if hi is None:
            continue
        candidate = (_covered_height(blocks, lo, hi), -(hi - lo), lo, hi)
        if best is None or candidate < best:
            best = candidate
    if best is None:
        return None
    return best[2], best[3]


def _column_groups(indices: list[int], blocks: list[TextBlock]) -> list[list[int]]:
    """Recursively split block indices at the best gutter, left to right."""
    subset = [blocks[i] for i in indices]
    gutter = _best_gutter(subset)
    if gutter is None:
        return [indices]
    cut = (gutter[0] + gutter[1]) / 2.0
    left = [i for i in indices if blocks[i].x_center <= cut]
    right = [i for i in indices if blocks[i].x_center > cut]
    if not left or not right:
        return [indices]
    return _column_groups(left, blocks) + _column_groups(right, blocks)


def detect_columns(blocks: list[TextBlock], page_width: float) -> ColumnAssignment:
    """Cluster one page's blocks into columns; empty input yields zero columns."""
    if page_width <= 0:
        raise ValueError("page_width must be positive")
    if not blocks:
        return ColumnAssignment(columns={}, column_counts={})
    pages = {b.page for b in blocks}
    if len(pages) != 1:
        raise ValueError("detect_columns expects blocks from a single page")
    page = pages.pop()

    groups = _column_groups(list(range(len(blocks))), blocks)
    columns = {i: col for col, group in enumerate(groups) for i in group}
    return ColumnAssignment(columns=columns, column_counts={page: len(groups)})


def assign_columns(blocks: list[TextBlock], page_width: float) -> ColumnAssignment:
    """Run column detection per page and merge into one assignment."""
    by_page: dict[int, list[int]] = {}
    for i, b in enumerate(blocks):
        by_page.setdefault(b.page, []).append(i)
    columns: dict[int, int] = {}
    counts: dict[int, int] = {}
    for page, indices in sorted(by_page.items()):
        sub = detect_columns([blocks[i] for i in indices], page_width)
        for local, global_index in enumerate(indices):
            columns[global_index] = sub.columns[local]
        counts[page] = sub.column_counts.get(page, 0)
    return ColumnAssignment(columns=columns, column_counts=counts)


def order_blocks(blocks: list[TextBlock], cols: ColumnAssignment) -> list[TextBlock]:
    """Assign reading order: pages ascending, then column-major, top to bottom."""
    missing = [i for i in range(len(blocks)) if i not in cols.columns]
    if missing:
        raise ValueError(f"column assignment does not cover blocks {missing}")
    ranked = sorted(
        range(len(blocks)),
        key=lambda i: (
            blocks[i].page,
            cols.columns[i],
            blocks[i].bbox[1],
            blocks[i].bbox[0],
        ),
    )
    return [replace(blocks[i], order=rank) for rank, i in enumerate(ranked)]


def reading_order(blocks: list[TextBlock], page_width: float) -> list[TextBlock]:
    """Convenience: column assignment plus ordering in one step."""
    return order_blocks(blocks, assign_columns(blocks, page_width))
