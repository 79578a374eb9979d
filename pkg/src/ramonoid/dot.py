"""Graphviz emission shared by ring-derived and abstract monoids."""

from __future__ import annotations

from typing import Iterable, Sequence, Tuple

from .words import format_word


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse_dot(
    name: str,
    labels: Sequence[str],
    covers: Iterable[Tuple[int, int]],
    idempotent: Sequence[bool],
) -> str:
    """Undirected Hasse diagram, bottom to top; idempotents drawn bold."""
    lines = [f"graph {_quote(name)} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for i, w in enumerate(labels):
        style = ", style=bold, fontname=\"bold\"" if idempotent[i] else ""
        lines.append(f"  n{i} [label={_quote(format_word(w))}{style}];")
    for lo, hi in covers:
        lines.append(f"  n{lo} -- n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"
