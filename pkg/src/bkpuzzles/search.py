"""Exhaustive tiling search for puzzle boundaries, and the product checks.

Counts are exact; the search is a straightforward depth-first sweep over
cells in canonical order (bottom row upward), pruning on the first local
rule violation.  No clever counting: correctness first.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from bkpuzzles import pins
from bkpuzzles.board import (
    Puzzle,
    all_cells,
    all_edges,
    allowed_cell_labelings,
    boundary_edges,
    cell_edges_clockwise,
    deflate_puzzle,
    is_pair,
)
from bkpuzzles.words import Word, ambiguate, content, deflate, inversions


@dataclass(frozen=True)
class TripleKey:
    """A boundary triple (NW, NE, S) over a common alphabet and length."""

    nw: Word
    ne: Word
    s: Word

    def __post_init__(self):
        if not len(self.nw) == len(self.ne) == len(self.s):
            raise ValueError("boundary words must have equal length")
        if not self.nw.d == self.ne.d == self.s.d:
            raise ValueError("boundary words must share one alphabet")

    @property
    def n(self) -> int:
        return len(self.nw)

    @property
    def d(self) -> int:
        return self.nw.d

    def words(self) -> tuple[Word, Word, Word]:
        return (self.nw, self.ne, self.s)

    def __str__(self) -> str:
        return f"({self.nw},{self.ne},{self.s})"


@dataclass(frozen=True)
class CoeffRecord:
    """A cached coefficient: the triple, its count, and where it came from."""

    key: TripleKey
    count: int
    provenance: str = "enumeration"

    @property
    def rigid(self) -> bool:
        return self.count == 1


@functools.lru_cache(maxsize=None)
def _tables(n: int, d: int, chirality: str):
    edges = all_edges(n)
    index = {e: i for i, e in enumerate(edges)}
    cells = tuple(
        tuple(index[e] for e in cell_edges_clockwise(cell)) for cell in all_cells(n)
    )
    boundary = {
        index[e] for side in boundary_edges(n) for e in side
    }
    triples = tuple(allowed_cell_labelings(d, chirality))
    return edges, index, cells, boundary, triples


def _search(n, d, fixed, collect, chirality, on_solution=None):
    """Depth-first cell-by-cell fill; yields solved label vectors.

    With ``on_solution`` set, each solved label list is passed to the
    callback instead of being accumulated.
    """
    edges, index, cells, boundary_idx, triples = _tables(n, d, chirality)
    labels = [None] * len(edges)
    for idx, lab in fixed:
        labels[idx] = lab
    ncells = len(cells)
    # boundary edges must carry single letters (no rhombus may straddle them)
    single_slots = tuple(
        tuple(k for k in range(3) if cell[k] in boundary_idx) for cell in cells
    )
    out = []
    count = 0

    def fill(ci: int):
        nonlocal count
        if ci == ncells:
            count += 1
            if on_solution is not None:
                on_solution(labels)
            elif collect:
                out.append(tuple(labels))
            return
        i0, i1, i2 = cells[ci]
        v0, v1, v2 = labels[i0], labels[i1], labels[i2]
        for t in triples:
            if v0 is not None and v0 != t[0]:
                continue
            if v1 is not None and v1 != t[1]:
                continue
            if v2 is not None and v2 != t[2]:
                continue
            if any(is_pair(t[k]) for k in single_slots[ci]):
                continue
            labels[i0], labels[i1], labels[i2] = t
            fill(ci + 1)
            labels[i0], labels[i1], labels[i2] = v0, v1, v2

    fill(0)
    return count, out


def _puzzles_from_vectors(n, d, vectors, chirality=None) -> list[Puzzle]:
    edges = all_edges(n)
    puzzles = [
        Puzzle(n=n, d=d, labels=dict(zip(edges, vec))) for vec in vectors
    ]
    puzzles.sort(key=Puzzle.sort_key)
    return puzzles


def enumerate_puzzles(
    key: TripleKey, mode: str = "count", chirality: str | None = None
):
    """Count (mode="count") or list (mode="list") all puzzles with the given
    boundary.  Lists come back duplicate-free in canonical label order."""
    if mode not in ("count", "list"):
        raise ValueError(f"unknown mode {mode!r}")
    if chirality is None:
        chirality = pins.CHIRALITY
    n, d = key.n, key.d
    edges, index, cells, _boundary, triples = _tables(n, d, chirality)
    nw, ne, s = boundary_edges(n)
    fixed = (
        [(index[e], x) for e, x in zip(nw, key.nw.letters)]
        + [(index[e], x) for e, x in zip(ne, key.ne.letters)]
        + [(index[e], x) for e, x in zip(s, key.s.letters)]
    )
    count, vectors = _search(n, d, fixed, mode == "list", chirality)
    if mode == "count":
        return count
    return count, _puzzles_from_vectors(n, d, vectors, chirality)


_count_memo: dict = {}


def bk_coefficient(key: TripleKey, chirality: str | None = None) -> int:
    """The Belkale-Kumar coefficient as a puzzle count, memoized."""
    if chirality is None:
        chirality = pins.CHIRALITY
    memo_key = (key.nw.letters, key.ne.letters, key.s.letters, key.d, chirality)
    if memo_key not in _count_memo:
        _count_memo[memo_key] = enumerate_puzzles(key, "count", chirality)
    return _count_memo[memo_key]


def enumerate_all(n: int, d: int, collect: bool = True, chirality: str | None = None):
    """All puzzles of size n on d letters, grouped by boundary words.

    Returns {(nw, ne, s) letter tuples: list of puzzles} when collecting,
    otherwise {boundary: count}.
    """
    if chirality is None:
        chirality = pins.CHIRALITY
    edges, index, cells, _boundary, triples = _tables(n, d, chirality)
    nw, ne, s = boundary_edges(n)
    nw_idx = [index[e] for e in nw]
    ne_idx = [index[e] for e in ne]
    s_idx = [index[e] for e in s]

    def boundary_of(vec):
        return (
            tuple(vec[i] for i in nw_idx),
            tuple(vec[i] for i in ne_idx),
            tuple(vec[i] for i in s_idx),
        )

    if not collect:
        counts: dict = {}

        def tally(labels):
            bkey = boundary_of(labels)
            counts[bkey] = counts.get(bkey, 0) + 1

        _search(n, d, [], False, chirality, on_solution=tally)
        return counts
    count, vectors = _search(n, d, [], True, chirality)
    grouped: dict = {}
    for vec in vectors:
        grouped.setdefault(boundary_of(vec), []).append(vec)
    return {
        k: _puzzles_from_vectors(n, d, v, chirality) for k, v in grouped.items()
    }


def letter_pairs(d: int) -> list[tuple[int, int]]:
    """All pairs (i, j) with d >= i > j >= 1, in canonical order."""
    return [(i, j) for i in range(2, d + 1) for j in range(1, i)]


def deflate_key(key: TripleKey, S: Iterable[int]) -> TripleKey:
    return TripleKey(*(deflate(w, S) for w in key.words()))


def ambiguate_key(key: TripleKey, classes) -> TripleKey:
    return TripleKey(*(ambiguate(w, classes) for w in key.words()))


@dataclass(frozen=True)
class FactorReport:
    """Outcome of the pairwise-deflation factorization check."""

    key: TripleKey
    pair_counts: dict = field(compare=False)
    product: int = 0
    count: int = 0
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations and self.product == self.count


def factor_check(key: TripleKey) -> FactorReport:
    """Compare the puzzle count with the product of its Grassmannian
    pair-deflation counts; report content or additivity violations rather
    than raising."""
    violations: list[str] = []
    if not content(key.nw) == content(key.ne) == content(key.s):
        violations.append("contents differ")
    else:
        ti, tr, ts = (inversions(w) for w in key.words())
        for i, j in letter_pairs(key.d):
            if ti[(i, j)] + tr[(i, j)] != ts[(i, j)]:
                violations.append(f"inv_{i}{j} not additive")
    pair_counts = {
        (i, j): bk_coefficient(deflate_key(key, {i, j})) for i, j in letter_pairs(key.d)
    }
    product = 1
    for value in pair_counts.values():
        product *= value
    return FactorReport(
        key=key,
        pair_counts=pair_counts,
        product=product,
        count=bk_coefficient(key),
        violations=tuple(violations),
    )


def assembly_tuple(p: Puzzle) -> tuple[Puzzle, ...]:
    """The tuple of pairwise deflations (D_ij p), one Grassmannian puzzle
    per letter pair i > j, in canonical pair order."""
    return tuple(deflate_puzzle(p, {i, j}) for i, j in letter_pairs(p.d))


@dataclass(frozen=True)
class CoarseReport:
    """Outcome of the ambiguation/deflation coarse product check."""

    key: TripleKey
    count: int
    ambiguated_count: int
    class_counts: tuple
    equal: bool


def coarse_check(key: TripleKey, classes: Sequence[Iterable[int]]) -> CoarseReport:
    """Check count(key) = count(ambiguated key) * prod of class-deflated
    counts for an ordered interval partition of the alphabet."""
    count = bk_coefficient(key)
    amb = bk_coefficient(ambiguate_key(key, classes))
    class_counts = tuple(bk_coefficient(deflate_key(key, cls)) for cls in classes)
    rhs = amb
    for value in class_counts:
        rhs *= value
    return CoarseReport(
        key=key,
        count=count,
        ambiguated_count=amb,
        class_counts=class_counts,
        equal=count == rhs,
    )
