#!/usr/bin/env python3
"""Freeze golden vectors for the built-in embedding provider.

The committed file pins bit-exact outputs for ten fixed inputs; the test
suite recomputes and compares for strict equality, which catches any
change to folding, padding, hashing, weighting or normalization.
"""

import json
from pathlib import Path

from resumatch.embed import HashedTrigramProvider

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "golden_vectors.json"

INPUTS = [
    "linux",
    "Linux",
    "ubuntu",
    "javascript",
    "data analysis",
    "data analytics",
    "machine learning",
    "gestion de projet",
    "développeur logiciel",
    "a",
]


def main() -> None:
    provider = HashedTrigramProvider()
    payload = {
        "provider_id": provider.id,
        "dimension": provider.dimension,
        "inputs": INPUTS,
        "vectors": [[float(v) for v in provider.embed(text).values] for text in INPUTS],
    }
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(payload), "utf-8")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
