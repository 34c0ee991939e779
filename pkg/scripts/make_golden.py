#!/usr/bin/env python3
"""Regenerate the expected-report fixtures for the input corpus.

Runs the full analysis on every corpus input and stores the report
with the timestamp removed, so the fixture is a pure function of the
input document.  Rerun after any intentional behavior change; tests
compare fresh runs against these files.
"""

import json
import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from ringext.report import analysis_report
from ringext.serialize import parse_input

CORPUS = os.path.join(os.path.dirname(__file__), "..", "corpus")
EXPECTED = os.path.join(CORPUS, "expected")


def main() -> None:
    os.makedirs(EXPECTED, exist_ok=True)
    names = sorted(f[:-5] for f in os.listdir(CORPUS) if f.endswith(".json"))
    for name in names:
        t0 = time.time()
        with open(os.path.join(CORPUS, f"{name}.json"), encoding="utf-8") as fh:
            parsed = parse_input(json.load(fh))
        doc = analysis_report(parsed)
        doc.pop("generated_at", None)
        out = os.path.join(EXPECTED, f"{name}.json")
        with open(out, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
            fh.write("\n")
        print(f"wrote {out} ({time.time() - t0:.2f}s)")


if __name__ == "__main__":
    main()
