"""Regenerate tests/data/graphs8.txt: all 12346 graphs on 8 vertices up to
isomorphism, one upper-triangle hex code per line.

Vertex augmentation with canonical-code dedupe over 133k candidates, about
15 seconds; the output is committed so the test suite only has to read and
validate it.

Usage: python tools/gen_graphs8.py
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "tests"))

from _helpers import GRAPHS8_CACHE, write_graphs8  # noqa: E402

if __name__ == "__main__":
    count = write_graphs8()
    print(f"wrote {count} graphs to {GRAPHS8_CACHE}")
