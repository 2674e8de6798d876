"""Region-edge orientation, gentle paths, and rigidity certificates.

A puzzle decomposes into regions of identical adjacent pieces.  The unit
edges separating two regions are oriented by a precedence rule on the
flanking pieces; walks along these directed edges that never turn more
than 60 degrees ("gentle paths") detect whether the puzzle is the unique
filling of its boundary: a puzzle is rigid iff it has no gentle loop.
"""

from __future__ import annotations

from dataclasses import dataclass

from bkpuzzles.board import (
    Cell,
    Edge,
    Puzzle,
    all_cells,
    boundary,
    cell_edges_clockwise,
    edge_cells,
    edge_endpoints,
    is_pair,
)

Vertex = tuple[int, int]

# the six unit directions, in 60-degree steps counterclockwise from E
_DIR_ANGLE = {"E": 0, "NE": 1, "NW": 2}


@dataclass(frozen=True)
class Piece:
    """A placed puzzle piece: a single-letter triangle or a rhombus."""

    kind: str                      # "tri" | "rhomb"
    letters: tuple[int, ...]       # (i,) or (i, j) with i > j
    cells: tuple[Cell, ...]
    waist: Edge | None = None

    @property
    def spread(self) -> int:
        return self.letters[0] - self.letters[-1]


@dataclass(frozen=True)
class DirectedEdge:
    """A region edge with the orientation assigned by the precedence rules."""

    tail: Vertex
    head: Vertex
    edge: Edge

    @property
    def angle(self) -> int:
        """Direction of travel in 60-degree units counterclockwise from E."""
        u, v = edge_endpoints(self.edge)
        base = _DIR_ANGLE[self.edge[2]]
        return base if (self.tail, self.head) == (u, v) else (base + 3) % 6


@dataclass
class RegionEdgeGraph:
    """Oriented region edges of a puzzle plus the gentle transitions."""

    puzzle: Puzzle
    nodes: list[DirectedEdge]
    arcs: dict  # node index -> list of node indices
    crossings: set  # vertices where two straight region lines cross


def pieces_of(p: Puzzle) -> tuple[list[Piece], dict]:
    """The pieces of a puzzle and a map from cell to its piece index."""
    cell_piece: dict[Cell, int] = {}
    pieces: list[Piece] = []
    for cell in all_cells(p.n):
        if cell in cell_piece:
            continue
        edges = cell_edges_clockwise(cell)
        pair_edges = [e for e in edges if is_pair(p.labels[e])]
        if not pair_edges:
            cell_piece[cell] = len(pieces)
            pieces.append(Piece("tri", (p.labels[edges[0]],), (cell,)))
            continue
        waist = pair_edges[0]
        mates = edge_cells(waist, p.n)
        for mate in mates:
            cell_piece[mate] = len(pieces)
        pieces.append(Piece("rhomb", p.labels[waist], tuple(mates), waist=waist))
    return pieces, cell_piece


def _rhombus_obtuse_vertices(piece: Piece) -> set[Vertex]:
    """The two 120-degree corners of a rhombus."""
    (u, v) = edge_endpoints(piece.waist)
    corners: set[Vertex] = set()
    for cell in piece.cells:
        corners.update(
            vx
            for e in cell_edges_clockwise(cell)
            for vx in edge_endpoints(e)
        )
    # the waist endpoints are the obtuse corners: the waist joins the two
    # 120-degree corners, the long diagonal joins the acute tips
    return {u, v}


def _region_ids(p: Puzzle) -> tuple[list[Piece], dict, list[int]]:
    pieces, cell_piece = pieces_of(p)
    parent = list(range(len(pieces)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for cell in all_cells(p.n):
        for e in cell_edges_clockwise(cell):
            if is_pair(p.labels[e]):
                continue
            cells = edge_cells(e, p.n)
            if len(cells) != 2:
                continue
            p1, p2 = (cell_piece[c] for c in cells)
            if p1 != p2 and pieces[p1].letters == pieces[p2].letters:
                r1, r2 = find(p1), find(p2)
                if r1 != r2:
                    parent[r1] = r2
    regions = [find(i) for i in range(len(pieces))]
    return pieces, cell_piece, regions


def orient(p: Puzzle) -> RegionEdgeGraph:
    """Orient every region edge and build the gentle-transition graph.

    Rules (the rhombus with the greater spread takes precedence):
    triangle vs rhombus, or (i,j) vs (i,k) with i > j > k, or (i,k) vs
    (j,k) with i > j > k: orient toward the obtuse vertex of the rhombus
    with the larger top-minus-bottom letter difference.
    """
    pieces, cell_piece, regions = _region_ids(p)
    nodes: list[DirectedEdge] = []
    seen: set[Edge] = set()
    for cell in all_cells(p.n):
        for e in cell_edges_clockwise(cell):
            if e in seen or is_pair(p.labels[e]):
                continue
            seen.add(e)
            cells = edge_cells(e, p.n)
            if len(cells) != 2:
                continue
            pi1, pi2 = (cell_piece[c] for c in cells)
            if pi1 == pi2 or regions[pi1] == regions[pi2]:
                continue
            a, b = pieces[pi1], pieces[pi2]
            winner = _precedent_rhombus(a, b, e)
            if winner is None:
                continue
            obtuse = _rhombus_obtuse_vertices(winner)
            u, v = edge_endpoints(e)
            in_u, in_v = u in obtuse, v in obtuse
            if in_u == in_v:
                raise RuntimeError(
                    f"edge {e} has {int(in_u) + int(in_v)} obtuse endpoints on "
                    f"rhombus {winner}; expected exactly one"
                )
            tail, head = (v, u) if in_u else (u, v)
            nodes.append(DirectedEdge(tail=tail, head=head, edge=e))

    by_vertex: dict[Vertex, list[Edge]] = {}
    for node in nodes:
        for vx in edge_endpoints(node.edge):
            by_vertex.setdefault(vx, []).append(node.edge)
    crossings = {
        vx for vx, edges in by_vertex.items() if _is_straight_crossing(edges)
    }

    by_tail: dict[Vertex, list[int]] = {}
    for idx, node in enumerate(nodes):
        by_tail.setdefault(node.tail, []).append(idx)
    arcs: dict[int, list[int]] = {i: [] for i in range(len(nodes))}
    for idx, node in enumerate(nodes):
        for jdx in by_tail.get(node.head, []):
            turn = (nodes[jdx].angle - node.angle) % 6
            if turn in (0, 1, 5) and (node.head not in crossings or turn == 0):
                arcs[idx].append(jdx)
    return RegionEdgeGraph(puzzle=p, nodes=nodes, arcs=arcs, crossings=crossings)


def _precedent_rhombus(a: Piece, b: Piece, e: Edge) -> Piece | None:
    """The rhombus whose obtuse vertex the edge points toward, or None.

    The precedence rules cover a triangle against a rhombus and two rhombi
    sharing their high or their low letter.  Two rhombi sharing only their
    middle letter, as (i, j) against (j, k), are left unoriented: such an
    edge carries no direction and no gentle path may use it.
    """
    if a.kind == "tri" and b.kind == "tri":
        raise RuntimeError(f"edge {e} separates two triangle regions")
    if a.kind == "tri":
        return b
    if b.kind == "tri":
        return a
    (i1, j1), (i2, j2) = a.letters, b.letters
    if i1 == i2 or j1 == j2:
        return a if a.spread > b.spread else b
    return None


def _is_straight_crossing(edges: list[Edge]) -> bool:
    """Whether the region edges at a vertex form exactly two straight lines."""
    if len(edges) != 4:
        return False
    lines: dict[int, int] = {}
    for e in edges:
        lines[_DIR_ANGLE[e[2]]] = lines.get(_DIR_ANGLE[e[2]], 0) + 1
    return sorted(lines.values()) == [2, 2]


def find_gentle_loop(graph: RegionEdgeGraph) -> list[DirectedEdge] | None:
    """A directed cycle of gentle transitions, or None."""
    color = [0] * len(graph.nodes)  # 0 new, 1 on stack, 2 done
    stack: list[int] = []

    def dfs(u: int) -> list[int] | None:
        color[u] = 1
        stack.append(u)
        for v in graph.arcs[u]:
            if color[v] == 1:
                return stack[stack.index(v):]
            if color[v] == 0:
                cycle = dfs(v)
                if cycle is not None:
                    return cycle
        stack.pop()
        color[u] = 2
        return None

    for start in range(len(graph.nodes)):
        if color[start] == 0:
            cycle = dfs(start)
            if cycle is not None:
                return [graph.nodes[i] for i in cycle]
    return None


def has_gentle_loop(p: Puzzle) -> tuple[bool, list[DirectedEdge] | None]:
    """Whether the puzzle has a gentle loop, with a witness cycle if so."""
    cycle = find_gentle_loop(orient(p))
    return cycle is not None, cycle


def is_rigid(p: Puzzle) -> bool:
    """Rigidity via the gentle-loop criterion (the primary implementation)."""
    found, _ = has_gentle_loop(p)
    return not found


def is_rigid_by_count(p: Puzzle) -> bool:
    """Cross-check: rigid iff the boundary admits exactly one filling."""
    from bkpuzzles.search import TripleKey, bk_coefficient

    return bk_coefficient(TripleKey(*boundary(p))) == 1
