"""Deterministic text, CSV, JSON and DOT emitters.

Identical inputs must produce identical bytes: every collection is sorted
before rendering, JSON is dumped with sorted keys, and CSV uses a fixed
line terminator.
"""

from __future__ import annotations

import csv
import io
import json


def word_str(word) -> str:
    """A word as compact digits, falling back to dashes for wide labels."""
    letters = [str(i) for i in word]
    if all(len(s) == 1 for s in letters):
        return "".join(letters)
    return "-".join(letters)


def subset_str(subset) -> str:
    return "{" + ",".join(str(j) for j in sorted(subset)) + "}"


def piece_label(subset, word) -> str:
    """Node label used in DOT output and text listings."""
    return f"J:{subset_str(subset)}|w:{word_str(word)}"


def piece_arg(subset, word) -> str:
    """The CLI argument form, e.g. ``J=1,2;w=121``."""
    return f"J={','.join(str(j) for j in sorted(subset))};w={word_str(word)}"


def canonical_json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def dot_graph(nodes, edges, name: str = "pieces") -> str:
    """A directed graph; one node per piece, edges upward in the order."""
    lines = [f"digraph {name} {{"]
    for label in nodes:
        lines.append(f'  "{label}";')
    for src, dst in edges:
        lines.append(f'  "{src}" -> "{dst}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
