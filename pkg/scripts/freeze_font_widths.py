#!/usr/bin/env python3
"""Dump standard-14 font metrics to the bundled package data file.

The PDF block extractor estimates glyph advances from these tables so it
does not need a PDF library at runtime. Run once; the output is committed.
"""

import json
from pathlib import Path

from reportlab.pdfbase.pdfmetrics import getFont
from reportlab.pdfbase._fontdata import standardFonts

OUT = Path(__file__).resolve().parent.parent / "src" / "resumatch" / "data" / "font_widths.json"


def main() -> None:
    metrics = {}
    for name in standardFonts:
        font = getFont(name)
        face = font.face
        metrics[name] = {
            "widths": list(font.widths),
            "ascent": face.ascent,
            "descent": face.descent,
        }
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(metrics, indent=1), encoding="utf-8")
    print(f"wrote {OUT} ({len(metrics)} fonts)")


if __name__ == "__main__":
    main()
