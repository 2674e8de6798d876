import itertools
import json
from fractions import Fraction

import pytest

from bkpuzzles.cone import (
    FaceDescription,
    Inequality,
    face_from_puzzle,
    facets,
    member,
    puzzle_inequality,
)
from bkpuzzles.oracle import lr_tableau
from bkpuzzles.search import TripleKey, enumerate_puzzles
from bkpuzzles.words import Word


def key_of(nw: str, ne: str, s: str) -> TripleKey:
    words = [Word.parse(text) for text in (nw, ne, s)]
    d = max(w.d for w in words)
    return TripleKey(*(Word(w.letters, d) for w in words))


def test_inequality_render_and_json():
    ineq = Inequality(n=2, nw=(0, 1), ne=(0, 1), s=(1, 0))
    assert ineq.render() == "lam_2 + mu_2 + nu_1 <= 0"
    obj = json.loads(ineq.to_json())
    assert obj == {"n": 2, "nw": [0, 1], "ne": [0, 1], "s": [1, 0]}
    assert ineq.satisfied((1, 0), (1, 0), (-1, -1))
    assert not ineq.satisfied((1, 1), (1, 1), (0, -1))


def test_puzzle_inequality_reads_clockwise():
    _, puzzles = enumerate_puzzles(key_of("12", "21", "21"), "list")
    ineq = puzzle_inequality(puzzles[0])
    # S side word 21 reads right-to-left as 12 -> coefficients (0, 1)
    assert ineq.nw == (0, 1)
    assert ineq.ne == (1, 0)
    assert ineq.s == (0, 1)


def test_puzzle_inequality_rejects_many_letters():
    _, puzzles = enumerate_puzzles(key_of("12132", "23112", "32121"), "list")
    with pytest.raises(ValueError):
        puzzle_inequality(puzzles[0])


@pytest.mark.parametrize("n,count", [(1, 0), (2, 3), (3, 12), (4, 41)])
def test_facet_counts_are_stable(n, count):
    assert len(facets(n)) == count
    # regeneration returns the identical canonical tuple
    assert facets(n) == tuple(sorted(set(facets(n)), key=lambda q: (q.nw, q.ne, q.s)))


def test_member_trivia():
    assert member((0, 0), (0, 0), (0, 0), 2)
    assert not member((1, 0), (0, 0), (0, 0), 2)  # trace fails
    assert not member((0, 1), (0, 0), (0, -1), 2)  # not weakly decreasing
    with pytest.raises(ValueError):
        member((0, 0, 0), (0, 0), (0, 0), 2)


def test_member_accepts_rationals():
    half = Fraction(1, 2)
    assert member((half, -half), (half, -half), (0, 0), 2)


def test_member_matches_lr_positivity():
    n = 3
    box = [
        p
        for p in itertools.product(range(2, -1, -1), repeat=n)
        if all(p[i] >= p[i + 1] for i in range(n - 1))
    ]
    targets = [
        p
        for p in itertools.product(range(4, -1, -1), repeat=n)
        if all(p[i] >= p[i + 1] for i in range(n - 1))
    ]
    for lam, mu in itertools.product(box, repeat=2):
        for nustar in targets:
            if sum(nustar) != sum(lam) + sum(mu):
                continue
            nu = tuple(-x for x in reversed(nustar))
            assert member(lam, mu, nu, n) == (lr_tableau(lam, mu, nustar) > 0)


def test_face_from_puzzle_golden():
    _, puzzles = enumerate_puzzles(key_of("12132", "23112", "32121"), "list")
    face = face_from_puzzle(puzzles[0])
    assert isinstance(face, FaceDescription)
    assert len(face.equalities) == 2
    # each equality comes from a rigid two-letter merge of the source puzzle
    for ineq in face.equalities:
        assert ineq.n == 5
        assert set(ineq.nw) | set(ineq.ne) | set(ineq.s) <= {0, 1}


def test_face_for_two_letter_puzzle_is_its_facet():
    _, puzzles = enumerate_puzzles(key_of("12", "21", "21"), "list")
    face = face_from_puzzle(puzzles[0])
    assert face.equalities == (puzzle_inequality(puzzles[0]),)


def test_face_refuses_gentle_loops():
    _, puzzles = enumerate_puzzles(key_of("121212", "121212", "212121"), "list")
    with pytest.raises(ValueError, match="gentle loop"):
        face_from_puzzle(puzzles[0])
