#!/usr/bin/env python3
"""Recount the expert-versus-framework comparison from the shipped cells.

Prints the markdown report for data/comparison_cells.json and the tally
behind it.  Equivalent to:

    semiosquare compare --cells data/comparison_cells.json --out -
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

from semiosquare.judging import load_cells, summarize, summary_to_dict
from semiosquare.render import comparison_report

ROOT = Path(__file__).resolve().parent.parent


def main() -> int:
    data = json.loads(
        (ROOT / "data" / "comparison_cells.json").read_text(encoding="utf-8")
    )
    cells = load_cells(data["cells"])
    summary = summarize(cells)
    print(comparison_report(cells, reported=data.get("reported")))
    tally = summary_to_dict(summary)
    tally.pop("cells", None)
    print(json.dumps(tally, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
