"""The Littlewood-Richardson cone: puzzle inequalities, faces, membership.

Each rigid two-letter puzzle of size n yields one linear inequality
NW . lambda + NE . mu + S . nu <= 0 on triples of weakly decreasing
n-vectors, with the 0/1 coefficient vectors read clockwise around the
puzzle.  Together with the chamber order and the trace equality these cut
out exactly the triples of spectra of Hermitian matrices summing to zero.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from bkpuzzles.board import Puzzle, ambiguate_puzzle, boundary
from bkpuzzles.rigidity import has_gentle_loop, is_rigid
from bkpuzzles.search import enumerate_all
from bkpuzzles.words import Word, cut_classes


@dataclass(frozen=True)
class Inequality:
    """A cone inequality nw . lambda + ne . mu + s . nu <= 0 (0/1 vectors,
    all three sides read clockwise around the puzzle)."""

    n: int
    nw: tuple[int, ...]
    ne: tuple[int, ...]
    s: tuple[int, ...]

    def evaluate(self, lam: Sequence, mu: Sequence, nu: Sequence):
        return (
            sum(c * x for c, x in zip(self.nw, lam))
            + sum(c * x for c, x in zip(self.ne, mu))
            + sum(c * x for c, x in zip(self.s, nu))
        )

    def satisfied(self, lam: Sequence, mu: Sequence, nu: Sequence) -> bool:
        return self.evaluate(lam, mu, nu) <= 0

    def render(self) -> str:
        def side(coeffs, symbol):
            terms = [f"{symbol}_{i + 1}" for i, c in enumerate(coeffs) if c]
            return " + ".join(terms)

        parts = [t for t in (side(self.nw, "lam"), side(self.ne, "mu"), side(self.s, "nu")) if t]
        return (" + ".join(parts) if parts else "0") + " <= 0"

    def to_json_obj(self) -> dict:
        return {"n": self.n, "nw": list(self.nw), "ne": list(self.ne), "s": list(self.s)}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))


def puzzle_inequality(p: Puzzle) -> Inequality:
    """The inequality read off a two-letter puzzle's boundary.

    The smaller letter maps to coefficient 0, the larger to 1; the NW and
    NE sides read left to right, the S side right to left (clockwise).
    """
    if p.d != 2:
        raise ValueError("inequalities come from two-letter puzzles")
    nw, ne, s = boundary(p)
    return Inequality(
        n=p.n,
        nw=tuple(x - 1 for x in nw.letters),
        ne=tuple(x - 1 for x in ne.letters),
        s=tuple(x - 1 for x in reversed(s.letters)),
    )


@functools.lru_cache(maxsize=None)
def facets(n: int) -> tuple[Inequality, ...]:
    """Inequalities from all rigid two-letter puzzles of size n with both
    letters present, deduplicated and canonically ordered."""
    if n < 1:
        raise ValueError("facets need n >= 1")
    found: set[Inequality] = set()
    for boundary_key, puzzles in enumerate_all(n, 2).items():
        if any(len(set(side)) == 1 for side in boundary_key):
            continue
        for p in puzzles:
            if is_rigid(p):
                found.add(puzzle_inequality(p))
    return tuple(sorted(found, key=lambda q: (q.nw, q.ne, q.s)))


@dataclass(frozen=True)
class FaceDescription:
    """A regular face of the cone: d-1 facet inequalities imposed as
    equalities, derived from the cuts of one loop-free puzzle."""

    source: Puzzle
    equalities: tuple[Inequality, ...]


def face_from_puzzle(p: Puzzle) -> FaceDescription:
    """The regular face determined by a loop-free puzzle: one equality per
    alphabet cut, from merging the letters at or below the cut against the
    rest.  Refuses puzzles with gentle loops."""
    if p.d < 2:
        raise ValueError("faces need at least two letters")
    found, witness = has_gentle_loop(p)
    if found:
        raise ValueError(f"puzzle has a gentle loop through {witness[0].edge}; no face")
    equalities = []
    for i in range(1, p.d):
        merged = ambiguate_puzzle(p, cut_classes(p.d, i))
        equalities.append(puzzle_inequality(merged))
    return FaceDescription(source=p, equalities=tuple(equalities))


def member(
    lam: Sequence, mu: Sequence, nu: Sequence, n: int
) -> bool:
    """Whether (lam, mu, nu) lies in the size-n cone: weakly decreasing
    n-vectors, coordinate sums totalling zero, and every facet inequality
    satisfied."""
    vectors = [tuple(Fraction(x) for x in v) for v in (lam, mu, nu)]
    for v in vectors:
        if len(v) != n:
            raise ValueError(f"expected length-{n} vectors")
    lam, mu, nu = vectors
    if any(v[i] < v[i + 1] for v in vectors for i in range(n - 1)):
        return False
    if sum(lam) + sum(mu) + sum(nu) != 0:
        return False
    return all(q.satisfied(lam, mu, nu) for q in facets(n))
