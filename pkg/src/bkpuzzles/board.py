"""The size-n triangular board and puzzles on it.

Vertices are (a, b) with a, b >= 0 and a + b <= n; the board is drawn
point-up with SW corner (0, 0), SE corner (n, 0), apex (0, n).  Vertex
(a, b) sits at the planar point (a + b/2, b*sqrt(3)/2).  Each edge is
named by its SW-most endpoint and a direction:

    E   (a, b) -> (a+1, b)
    NE  (a, b) -> (a, b+1)
    NW  (a, b) -> (a-1, b+1)

A puzzle is a total labeling of the edges by single letters or by pairs
(i, j) with i > j (the waists of rhombi), subject to the two-piece local
rules checked in :func:`validate`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from bkpuzzles import pins
from bkpuzzles.words import Word, content, interval_classes

Edge = tuple[int, int, str]        # (a, b, direction)
Cell = tuple[str, int, int]        # ("up"|"down", a, b)
Label = "int | tuple[int, int]"    # single letter or rhombus pair, i > j

DIR_ORDER = {"E": 0, "NE": 1, "NW": 2}

# unit displacement of each edge direction in (a, b) coordinates
DIR_VECTOR = {"E": (1, 0), "NE": (0, 1), "NW": (-1, 1)}


class PuzzleValidationError(ValueError):
    """A puzzle breaking the local piece rules; carries the offending cell."""

    def __init__(self, message: str, cell: Cell | None = None):
        super().__init__(message)
        self.cell = cell


def all_edges(n: int) -> list[Edge]:
    """Every edge of the size-n board, in canonical (b, a, E<NE<NW) order."""
    edges = []
    for b in range(n + 1):
        for a in range(n + 1 - b):
            if a + b <= n - 1:
                edges.append((a, b, "E"))
                edges.append((a, b, "NE"))
            if a >= 1:
                edges.append((a, b, "NW"))
    edges.sort(key=lambda e: (e[1], e[0], DIR_ORDER[e[2]]))
    return edges


def edge_endpoints(edge: Edge) -> tuple[tuple[int, int], tuple[int, int]]:
    a, b, direction = edge
    da, db = DIR_VECTOR[direction]
    return (a, b), (a + da, b + db)


def up_cells(n: int) -> list[Cell]:
    return [("up", a, b) for b in range(n) for a in range(n - b)]


def down_cells(n: int) -> list[Cell]:
    return [("down", a, b) for b in range(n - 1) for a in range(n - 1 - b)]


def all_cells(n: int) -> list[Cell]:
    """Cells in enumeration order: bottom row first, left to right, with each
    down-cell following the up-cell on its left."""
    cells: list[Cell] = []
    for b in range(n):
        for a in range(n - b):
            cells.append(("up", a, b))
            if a + b <= n - 2:
                cells.append(("down", a, b))
    return cells


def cell_edges_clockwise(cell: Cell) -> tuple[Edge, Edge, Edge]:
    """The three edges of a cell, in clockwise cyclic order."""
    kind, a, b = cell
    if kind == "up":
        return ((a, b, "NE"), (a + 1, b, "NW"), (a, b, "E"))
    return ((a, b + 1, "E"), (a + 1, b, "NE"), (a + 1, b, "NW"))


def cell_vertices(cell: Cell) -> tuple[tuple[int, int], ...]:
    kind, a, b = cell
    if kind == "up":
        return ((a, b), (a + 1, b), (a, b + 1))
    return ((a + 1, b), (a, b + 1), (a + 1, b + 1))


def edge_cells(edge: Edge, n: int) -> list[Cell]:
    """The one or two cells bordering an edge."""
    a, b, direction = edge
    if direction == "E":
        candidates = [("up", a, b), ("down", a, b - 1)]
    elif direction == "NE":
        candidates = [("up", a, b), ("down", a - 1, b)]
    else:
        candidates = [("up", a - 1, b), ("down", a - 1, b)]
    out = []
    for kind, ca, cb in candidates:
        if ca < 0 or cb < 0:
            continue
        limit = n - 1 if kind == "up" else n - 2
        if ca + cb <= limit:
            out.append((kind, ca, cb))
    return out


def boundary_edges(n: int) -> tuple[list[Edge], list[Edge], list[Edge]]:
    """The NW, NE, and S side edges, each in left-to-right reading order."""
    nw = [(0, b, "NE") for b in range(n)]
    ne = [(a, n - a, "NW") for a in range(1, n + 1)]
    s = [(a, 0, "E") for a in range(n)]
    return nw, ne, s


def is_pair(label) -> bool:
    return isinstance(label, tuple)


def allowed_cell_labelings(d: int, chirality: str | None = None) -> list[tuple]:
    """All label triples a cell may carry, aligned with its clockwise edges.

    A triple is either three copies of one letter, or a pair label in one
    of the three positions followed clockwise by the two single letters in
    the order fixed by the chirality constant.
    """
    if chirality is None:
        chirality = pins.CHIRALITY
    if chirality not in ("ij", "ji"):
        raise ValueError(f"bad chirality {chirality!r}")
    out: list[tuple] = [(i, i, i) for i in range(1, d + 1)]
    for i in range(2, d + 1):
        for j in range(1, i):
            first, second = (i, j) if chirality == "ij" else (j, i)
            for t in range(3):
                labels = [None, None, None]
                labels[t] = (i, j)
                labels[(t + 1) % 3] = first
                labels[(t + 2) % 3] = second
                out.append(tuple(labels))
    return out


@dataclass(frozen=True)
class Puzzle:
    """A complete edge labeling of the size-n board.

    Immutable after construction; ``labels`` maps every edge to its label.
    """

    n: int
    d: int
    labels: dict

    def __post_init__(self):
        expected = all_edges(self.n)
        if set(self.labels) != set(expected):
            raise ValueError("labels must cover every board edge exactly once")

    def label(self, edge: Edge):
        return self.labels[edge]

    def canonical_items(self) -> tuple:
        return tuple((e, self.labels[e]) for e in all_edges(self.n))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Puzzle):
            return NotImplemented
        return (self.n, self.d) == (other.n, other.d) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash((self.n, self.d, self.canonical_items()))

    def sort_key(self) -> tuple:
        def label_key(lab):
            return (1, lab[0], lab[1]) if is_pair(lab) else (0, lab, 0)

        return tuple(label_key(self.labels[e]) for e in all_edges(self.n))

    def to_json_obj(self) -> dict:
        edges = []
        for e in all_edges(self.n):
            lab = self.labels[e]
            text = f"{lab[0]}|{lab[1]}" if is_pair(lab) else str(lab)
            edges.append({"a": e[0], "b": e[1], "dir": e[2], "label": text})
        return {"n": self.n, "d": self.d, "edges": edges}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Puzzle":
        labels = {}
        for item in obj["edges"]:
            text = item["label"]
            if "|" in text:
                i, j = (int(part) for part in text.split("|"))
                lab = (i, j)
            else:
                lab = int(text)
            labels[(item["a"], item["b"], item["dir"])] = lab
        return cls(n=obj["n"], d=obj["d"], labels=labels)

    @classmethod
    def from_json(cls, text: str) -> "Puzzle":
        return cls.from_json_obj(json.loads(text))


def monochromatic(n: int, letter: int = 1, d: int | None = None) -> Puzzle:
    """The all-triangles puzzle in a single letter."""
    if d is None:
        d = letter
    return Puzzle(n=n, d=d, labels={e: letter for e in all_edges(n)})


def validate(p: Puzzle, chirality: str | None = None) -> None:
    """Check the piece rules on every cell; raise PuzzleValidationError.

    Each cell must carry three equal single letters, or exactly one pair
    label (i, j) whose two companion singles, read clockwise from the pair
    edge, are the letters i and j in the pinned chirality order.  Boundary
    edges must be single.  Waist pairing across rhombi is then automatic,
    since the two cells flanking a pair edge each see the same pair label.
    """
    allowed = set(allowed_cell_labelings(p.d, chirality))
    nw, ne, s = boundary_edges(p.n)
    for e in nw + ne + s:
        if is_pair(p.labels[e]):
            raise PuzzleValidationError(f"boundary edge {e} carries a pair label")
    for cell in all_cells(p.n):
        triple = tuple(p.labels[e] for e in cell_edges_clockwise(cell))
        if triple not in allowed:
            raise PuzzleValidationError(
                f"cell {cell} carries labels {triple} violating the piece rules",
                cell=cell,
            )


def boundary(p: Puzzle) -> tuple[Word, Word, Word]:
    """The boundary words (NW, NE, S), each read left to right."""
    nw, ne, s = boundary_edges(p.n)
    return (
        Word(tuple(p.labels[e] for e in nw), p.d),
        Word(tuple(p.labels[e] for e in ne), p.d),
        Word(tuple(p.labels[e] for e in s), p.d),
    )


@dataclass(frozen=True)
class PieceCensus:
    """Piece counts of a puzzle: triangles per letter, rhombi per pair.

    ``rhombi_by_dir`` splits each pair's count by the compass direction of
    the rhombus's acute corners: "S" (axis N-S, waist E), "NE" (waist NW),
    or "NW" (waist NE).
    """

    up: dict
    down: dict
    rhombi: dict
    rhombi_by_dir: dict


def waist_direction(edge_dir: str) -> str:
    """Acute-corner compass class of a rhombus from its waist direction."""
    return {"E": "S", "NW": "NE", "NE": "NW"}[edge_dir]


def census(p: Puzzle) -> PieceCensus:
    up = {i: 0 for i in range(1, p.d + 1)}
    down = {i: 0 for i in range(1, p.d + 1)}
    rhombi: dict[tuple[int, int], int] = {}
    by_dir: dict[tuple[int, int], dict[str, int]] = {}
    for edge, lab in p.labels.items():
        if is_pair(lab):
            rhombi[lab] = rhombi.get(lab, 0) + 1
            per = by_dir.setdefault(lab, {"S": 0, "NE": 0, "NW": 0})
            per[waist_direction(edge[2])] += 1
    for cell in all_cells(p.n):
        triple = tuple(p.labels[e] for e in cell_edges_clockwise(cell))
        if not any(is_pair(x) for x in triple):
            (up if cell[0] == "up" else down)[triple[0]] += 1
    return PieceCensus(up=up, down=down, rhombi=rhombi, rhombi_by_dir=by_dir)


def reflect_dual(p: Puzzle) -> Puzzle:
    """Left-right mirror with the letter order reversed (i -> d + 1 - i)."""
    n, d = p.n, p.d
    labels = {}
    for (a, b, direction), lab in p.labels.items():
        if direction == "E":
            new_edge = (n - a - b - 1, b, "E")
        elif direction == "NE":
            new_edge = (n - a - b, b, "NW")
        else:
            new_edge = (n - a - b, b, "NE")
        if is_pair(lab):
            new_lab = (d + 1 - lab[1], d + 1 - lab[0])
        else:
            new_lab = d + 1 - lab
        labels[new_edge] = new_lab
    return Puzzle(n=n, d=d, labels=labels)


def _rhombus_waists(p: Puzzle) -> list[Edge]:
    return [e for e, lab in p.labels.items() if is_pair(lab)]


def deflate_puzzle(p: Puzzle, S: Iterable[int]) -> Puzzle:
    """Contract every edge whose letters all lie outside S.

    Rhombi with exactly one letter in S collapse onto their surviving
    parallel sides; rhombi and triangles with no letter in S shrink to
    points.  The result is a puzzle of size sum of the surviving letter
    multiplicities, with the alphabet renormalized to 1..|S|.
    """
    S = sorted(set(S))
    if not S:
        raise ValueError("deflation by the empty letter set")
    for s_ in S:
        if not 1 <= s_ <= p.d:
            raise ValueError(f"letter {s_} outside alphabet 1..{p.d}")
    rank = {letter: r + 1 for r, letter in enumerate(S)}
    keep = set(S)

    # union-find over vertices; contracted single edges merge their endpoints
    parent: dict[tuple[int, int], tuple[int, int]] = {}

    def find(v):
        root = v
        while parent.get(root, root) != root:
            root = parent[root]
        while parent.get(v, v) != v:
            parent[v], v = root, parent[v]
        return root

    def union(u, v):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv

    for edge, lab in p.labels.items():
        if not is_pair(lab) and lab not in keep:
            u, v = edge_endpoints(edge)
            union(u, v)

    # surviving edges between vertex classes, with their lattice directions
    survivors: dict[tuple, Label] = {}

    def record(u, v, direction, lab):
        key = (find(u), find(v), direction)
        old = survivors.get(key)
        if old is not None and old != lab:
            raise PuzzleValidationError(
                f"deflation produced conflicting labels {old} and {lab}"
            )
        survivors[key] = lab

    for edge, lab in p.labels.items():
        u, v = edge_endpoints(edge)
        if is_pair(lab):
            i, j = lab
            if i in keep and j in keep:
                record(u, v, edge[2], (rank[i], rank[j]))
            # a waist with one surviving letter merges into that letter's
            # parallel sides, already recorded; with none it is a point
        elif lab in keep:
            record(u, v, edge[2], rank[lab])

    # assign coordinates in the deflated board by BFS from the SW corner
    new_size = sum(1 for e, lab in p.labels.items()
                   if e[1] == 0 and e[2] == "E" and not is_pair(lab) and lab in keep)
    coords: dict[tuple[int, int], tuple[int, int]] = {find((0, 0)): (0, 0)}
    adjacency: dict[tuple[int, int], list] = {}
    for (cu, cv, direction), lab in survivors.items():
        adjacency.setdefault(cu, []).append((cv, DIR_VECTOR[direction]))
        adjacency.setdefault(cv, []).append((cu, tuple(-x for x in DIR_VECTOR[direction])))
    frontier = [find((0, 0))]
    while frontier:
        node = frontier.pop()
        base = coords[node]
        for neighbor, (da, db) in adjacency.get(node, []):
            pos = (base[0] + da, base[1] + db)
            if neighbor in coords:
                if coords[neighbor] != pos:
                    raise PuzzleValidationError("deflation geometry is inconsistent")
            else:
                coords[neighbor] = pos
                frontier.append(neighbor)

    labels = {}
    for (cu, cv, direction), lab in survivors.items():
        a, b = coords[cu]
        labels[(a, b, direction)] = lab
    return Puzzle(n=new_size, d=len(S), labels=labels)


def ambiguate_puzzle(p: Puzzle, classes: Sequence[Iterable[int]]) -> Puzzle:
    """Relabel letters by their interval class; rhombi whose two letters
    merge become pairs of triangles."""
    mapping = interval_classes(classes, p.d)
    labels = {}
    for edge, lab in p.labels.items():
        if is_pair(lab):
            ci, cj = mapping[lab[0]], mapping[lab[1]]
            labels[edge] = ci if ci == cj else (ci, cj)
        else:
            labels[edge] = mapping[lab]
    return Puzzle(n=p.n, d=len(classes), labels=labels)
