"""JSON serialization of character tables and related reports."""

from __future__ import annotations

import json
from typing import Dict, Tuple

from .polynomial import Scalar, as_scalar
from .verma import WeightSpaceKey

Table = Dict[WeightSpaceKey, Tuple[int, int]]


def sorted_keys(keys):
    return sorted(keys, key=lambda k: (k.depth, -k.weight))


def character_report(lam: int, c, max_depth: int, table: Table, images: Dict = None) -> dict:
    rows = []
    for key in sorted_keys(table):
        dim, rank = table[key]
        row = {"weight": key.weight, "depth": key.depth, "dimW": dim, "rank": rank}
        if images is not None:
            row["imageDim"] = images[key]
        rows.append(row)
    return {"lambda": lam, "c": str(as_scalar(c)), "D": max_depth, "rows": rows}


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def parse_character_report(text: str) -> Tuple[int, Scalar, int, Table]:
    """Inverse of :func:`character_report` (row extras are ignored)."""
    data = json.loads(text)
    table = {WeightSpaceKey(r["weight"], r["depth"]): (r["dimW"], r["rank"]) for r in data["rows"]}
    return data["lambda"], as_scalar(data["c"]), data["D"], table


def render_table(report: dict) -> str:
    cols = ["weight", "depth", "dimW", "rank"]
    if report["rows"] and "imageDim" in report["rows"][0]:
        cols.append("imageDim")
    lines = [f"lambda={report['lambda']} c={report['c']} D={report['D']}",
             "  ".join(f"{c:>8}" for c in cols)]
    for row in report["rows"]:
        lines.append("  ".join(f"{row[c]:>8}" for c in cols))
    return "\n".join(lines) + "\n"
