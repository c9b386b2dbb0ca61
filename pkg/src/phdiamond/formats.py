"""JSON, CSV and ASCII renderings of a diamond.

JSON and CSV output is byte-for-byte deterministic: entries are sorted by
``(d, i, k)`` and dimensions are written as decimal strings in JSON so that
consumers limited to 64-bit integers do not overflow.
"""

from __future__ import annotations

import csv
import io
import json

from .tables import TriTable


def _sorted_entries(table: TriTable):
    return sorted(table.items(), key=lambda kv: (kv[0][2], kv[0][0], kv[0][1]))


def to_document(table: TriTable, name: str, total: bool = False) -> dict:
    doc: dict = {"name": name, "n": table.n}
    if total:
        doc["total"] = str(table.total())
    doc["entries"] = [{"i": i, "k": k, "d": d, "h": str(h)} for (i, k, d), h in _sorted_entries(table)]
    return doc


def to_json(table: TriTable, name: str) -> str:
    return json.dumps(to_document(table, name, total=True), indent=2) + "\n"


def to_csv(table: TriTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["i", "k", "d", "h"])
    for (i, k, d), h in _sorted_entries(table):
        writer.writerow([i, k, d, h])
    return buf.getvalue()


def to_ascii(table: TriTable, name: str = "") -> str:
    """One block per nonempty ``d``-slice: rows are ``i``, columns are ``k``; zeros blank."""
    n = table.n
    size = 2 * n + 1
    width = max([len(str(h)) for h in table.entries.values()] + [len(str(size - 1)), 1])
    lines = []
    if name:
        lines.append(f"{name}  (n={n}, total={table.total()})")
    for d in sorted({key[2] for key in table.entries}):
        lines.append(f"d = {d}")
        lines.append(" " * 6 + " ".join(f"{k:>{width}}" for k in range(size)))
        for i in range(size):
            cells = [table[(i, k, d)] for k in range(size)]
            row = " ".join(f"{c:>{width}}" if c else " " * width for c in cells)
            lines.append((f"i={i:<3} " + row).rstrip())
        lines.append("")
    return "\n".join(lines)
