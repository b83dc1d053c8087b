"""ASCII and SVG pictures of paths and tableaux.

Paths render with one character column per step: an up step of rise a
stacks a '/' cells, a down step of drop d stacks d '\\' cells.  SVG paths
are polylines through the lattice points of the rank sequence, all
coordinates integral so output is byte-stable.
"""

from __future__ import annotations

from .paths import StepSequence
from .ranking import RankTableau
from .tableau import Tableau


def path_ascii(steps: StepSequence) -> str:
    heights = [0]
    for a in steps:
        heights.append(heights[-1] + a)
    top = max(heights)
    width = len(steps)
    grid = [[" "] * width for _ in range(max(top, 1))]
    for j, a in enumerate(steps):
        h = heights[j]
        if a > 0:
            for y in range(h, h + a):
                grid[y][j] = "/"
        else:
            for y in range(h - 1, h + a - 1, -1):
                grid[y][j] = "\\"
    rows = ["".join(row).rstrip() for row in reversed(grid)]
    return "\n".join(rows)


def path_svg(steps: StepSequence, unit: int = 20, pad: int = 10) -> str:
    heights = [0]
    for a in steps:
        heights.append(heights[-1] + a)
    top = max(heights)
    width = len(steps) * unit + 2 * pad
    height = max(top, 1) * unit + 2 * pad
    y0 = pad + top * unit  # svg y of level zero
    points = " ".join(
        f"{pad + i * unit},{y0 - h * unit}" for i, h in enumerate(heights)
    )
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'  <line x1="{pad}" y1="{y0}" x2="{width - pad}" y2="{y0}" '
        'stroke="#999" stroke-width="1"/>',
        f'  <polyline points="{points}" fill="none" stroke="#000" '
        'stroke-width="2"/>',
        "</svg>",
    ]
    return "\n".join(lines)


def tableau_ascii(t: Tableau, ranks: RankTableau | None = None) -> str:
    cols = t.columns
    cells = [
        [
            str(v) if ranks is None else f"{v}:{ranks.columns[c][row]}"
            for row, v in enumerate(col)
        ]
        for c, col in enumerate(cols)
    ]
    widths = [max(len(s) for s in col) for col in cells]
    depth = max(len(col) for col in cols)
    rows = []
    for row in range(depth):
        parts = []
        for c, col in enumerate(cells):
            parts.append(
                col[row].rjust(widths[c]) if row < len(col) else " " * widths[c]
            )
        rows.append("  ".join(parts).rstrip())
    return "\n".join(rows)


def rank_ascii(r: RankTableau) -> str:
    cells = [[str(v) for v in col] for col in r.columns]
    widths = [max(len(s) for s in col) for col in cells]
    depth = max(len(col) for col in r.columns)
    rows = []
    for row in range(depth):
        parts = []
        for c, col in enumerate(cells):
            parts.append(
                col[row].rjust(widths[c]) if row < len(col) else " " * widths[c]
            )
        rows.append("  ".join(parts).rstrip())
    return "\n".join(rows)


def tableau_svg(
    t: Tableau, ranks: RankTableau | None = None, cell: int = 34, pad: int = 10
) -> str:
    cols = t.columns
    depth = max(len(col) for col in cols)
    width = len(cols) * cell + 2 * pad
    height = depth * cell + 2 * pad
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">'
    ]
    for c, col in enumerate(cols):
        x = pad + c * cell
        for row, v in enumerate(col):
            y = pad + row * cell
            label = str(v) if ranks is None else f"{v}:{ranks.columns[c][row]}"
            parts.append(
                f'  <rect x="{x}" y="{y}" width="{cell}" height="{cell}" '
                'fill="none" stroke="#000"/>'
            )
            parts.append(
                f'  <text x="{x + cell // 2}" y="{y + cell // 2 + 5}" '
                f'text-anchor="middle" font-size="12">{label}</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts)
