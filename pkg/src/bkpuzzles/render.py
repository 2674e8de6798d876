"""Deterministic ASCII and SVG renderings of puzzles.

Both formats are byte-stable across runs for the same puzzle: cells and
edges are visited in canonical order and floating-point coordinates are
formatted with a fixed precision, so golden-file diffs are meaningful.
"""

from __future__ import annotations

import math

from bkpuzzles.board import (
    Puzzle,
    all_cells,
    all_edges,
    cell_edges_clockwise,
    cell_vertices,
    edge_endpoints,
    is_pair,
)

# fixed unit-triangle geometry: side 40 units
SIDE = 40.0
ROW_HEIGHT = SIDE * math.sqrt(3) / 2
MARGIN = 10.0

_PALETTE = [
    "#e8f0fe", "#fde8e8", "#e8fdf0", "#fdf6e8", "#f0e8fd",
    "#e8fbfd", "#fde8f6", "#f4fde8", "#e8e9fd",
]


def _label_text(label) -> str:
    if is_pair(label):
        return f"{label[0]}{label[1]}"
    return str(label)


def ascii_puzzle(p: Puzzle) -> str:
    """Edge labels on a triangular character grid.

    Each up-triangle prints as ``/xy\\`` where x labels its NE (left) edge
    and y its NW (right) edge; horizontal lines carry the E-edge labels.
    Pair labels print as the two digits of the waist.

    >>> from bkpuzzles.board import monochromatic
    >>> print(ascii_puzzle(monochromatic(2)))
      /11\\
       1
    /11\\/11\\
     1   1
    """
    n = p.n
    lines = []
    for b in range(n - 1, -1, -1):
        indent = " " * (2 * b)
        slant = indent
        for a in range(n - b):
            left = _label_text(p.labels[(a, b, "NE")])
            right = _label_text(p.labels[(a + 1, b, "NW")])
            slant += f"/{left}{right}\\"
        base = indent
        for a in range(n - b):
            base += f" {_label_text(p.labels[(a, b, 'E')])}  "
        lines.append(slant)
        lines.append(base.rstrip())
    return "\n".join(lines)


def _xy(vertex, n: int) -> tuple[float, float]:
    a, b = vertex
    return (MARGIN + (a + b / 2) * SIDE, MARGIN + (n - b) * ROW_HEIGHT)


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def svg_puzzle(p: Puzzle, arrows: bool = False) -> str:
    """An SVG document for the puzzle.

    Unit triangles with side 40; single-letter cells are tinted by letter,
    waists are drawn dashed.  With ``arrows=True`` the oriented region
    edges (the gentle-path graph) are decorated with arrowheads.
    """
    n = p.n
    width = n * SIDE + 2 * MARGIN
    height = n * ROW_HEIGHT + 2 * MARGIN
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">'
    ]
    for cell in all_cells(n):
        pts = [_xy(v, n) for v in cell_vertices(cell)]
        letters = set()
        for e in cell_edges_clockwise(cell):
            lab = p.labels[e]
            letters.update(lab if is_pair(lab) else (lab,))
        fill = _PALETTE[(sum(letters) - 1) % len(_PALETTE)]
        point_str = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
        parts.append(f'<polygon points="{point_str}" fill="{fill}" stroke="none"/>')
    for edge in all_edges(p.n):
        (u, v) = edge_endpoints(edge)
        (x1, y1), (x2, y2) = _xy(u, n), _xy(v, n)
        lab = p.labels[edge]
        dash = ' stroke-dasharray="4,3"' if is_pair(lab) else ""
        parts.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="#333" stroke-width="1"{dash}/>'
        )
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        parts.append(
            f'<text x="{_fmt(mx)}" y="{_fmt(my)}" font-size="10" fill="#111" '
            f'text-anchor="middle" dominant-baseline="middle">{_label_text(lab)}</text>'
        )
    if arrows:
        from bkpuzzles.rigidity import orient

        graph = orient(p)
        for node in graph.nodes:
            (tx, ty), (hx, hy) = _xy(node.tail, n), _xy(node.head, n)
            dx, dy = hx - tx, hy - ty
            norm = math.hypot(dx, dy) or 1.0
            ux, uy = dx / norm, dy / norm
            px, py = -uy, ux
            tipx, tipy = tx + 0.70 * dx, ty + 0.70 * dy
            basex, basey = tx + 0.50 * dx, ty + 0.50 * dy
            w = 4.0
            pts = (
                f"{_fmt(tipx)},{_fmt(tipy)} "
                f"{_fmt(basex + w * px)},{_fmt(basey + w * py)} "
                f"{_fmt(basex - w * px)},{_fmt(basey - w * py)}"
            )
            parts.append(f'<polygon points="{pts}" fill="#c00" stroke="none"/>')
    parts.append("</svg>")
    return "\n".join(parts)


def render(p: Puzzle, fmt: str, arrows: bool = False) -> str:
    """Render a puzzle as "ascii", "svg", or canonical "json" text."""
    if fmt == "ascii":
        return ascii_puzzle(p)
    if fmt == "svg":
        return svg_puzzle(p, arrows=arrows)
    if fmt == "json":
        return p.to_json()
    raise ValueError(f"unknown format {fmt!r}")
