"""Deterministic ASCII and SVG diagrams of polyominoes and mappings."""
from __future__ import annotations

from typing import Optional

from .grid import Polyomino
from .cube import ConsistentMapping


class BadMappingIndex(ValueError):
    pass


def render_ascii(p: Polyomino, mapping: Optional[ConsistentMapping] = None
                 ) -> str:
    """Grid of face digits 1-6 (or '#' without a mapping), '.' outside."""
    lines = []
    for r in range(p.rows):
        row = []
        for c in range(p.cols):
            if (r, c) not in p.cells:
                row.append(".")
            elif mapping is None:
                row.append("#")
            else:
                row.append(str(mapping.covered_face((r, c))))
        lines.append("".join(row))
    return "\n".join(lines) + "\n"


_CELL = 40
_SIDES = {  # side -> segment (x1, y1, x2, y2) in cell-local units
    "N": (0, 0, 1, 0),
    "E": (1, 0, 1, 1),
    "S": (0, 1, 1, 1),
    "W": (0, 0, 0, 1),
}
_NEIGHBOUR = {"N": (-1, 0), "E": (0, 1), "S": (1, 0), "W": (0, -1)}


def render_svg(p: Polyomino, mapping: Optional[ConsistentMapping] = None
               ) -> str:
    """SVG with thick boundary edges (including slits), dashed interior
    creases, and centred face labels; rectangles, lines and text only."""
    width, height = p.cols * _CELL, p.rows * _CELL
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
    ]
    for r, c in p.sorted_cells():
        out.append(
            f'<rect x="{c * _CELL}" y="{r * _CELL}" width="{_CELL}" '
            f'height="{_CELL}" fill="#f2f2f2" stroke="none"/>')
    creases = []
    borders = []
    for r, c in p.sorted_cells():
        for side, (dr, dc) in _NEIGHBOUR.items():
            nb = (r + dr, c + dc)
            x1, y1, x2, y2 = _SIDES[side]
            seg = ((c + x1) * _CELL, (r + y1) * _CELL,
                   (c + x2) * _CELL, (r + y2) * _CELL)
            if nb in p.cells and not p.is_cut((r, c), nb):
                if side in ("E", "S"):  # draw shared creases once
                    creases.append(seg)
            else:
                borders.append(seg)
    for x1, y1, x2, y2 in creases:
        out.append(
            f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
            f'stroke="#888888" stroke-width="1" stroke-dasharray="4 3"/>')
    for x1, y1, x2, y2 in sorted(set(borders)):
        out.append(
            f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
            f'stroke="#000000" stroke-width="3"/>')
    if mapping is not None:
        for r, c in p.sorted_cells():
            out.append(
                f'<text x="{c * _CELL + _CELL // 2}" '
                f'y="{r * _CELL + _CELL // 2 + 5}" font-size="16" '
                f'text-anchor="middle" fill="#000000">'
                f'{mapping.covered_face((r, c))}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(p: Polyomino, mapping: Optional[ConsistentMapping] = None,
           fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return render_ascii(p, mapping)
    if fmt == "svg":
        return render_svg(p, mapping)
    raise ValueError(f"unknown format: {fmt}")
