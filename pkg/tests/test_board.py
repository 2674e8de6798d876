import json
from math import comb
from pathlib import Path

import pytest

from bkpuzzles.board import (
    Puzzle,
    PuzzleValidationError,
    all_cells,
    all_edges,
    ambiguate_puzzle,
    boundary,
    boundary_edges,
    census,
    deflate_puzzle,
    monochromatic,
    reflect_dual,
    validate,
)
from bkpuzzles.search import TripleKey, enumerate_puzzles
from bkpuzzles.words import Word, ambiguate, content, deflate, dual, relabel_reverse

DATA = Path(__file__).resolve().parent.parent / "src" / "bkpuzzles" / "data"


@pytest.fixture(scope="module")
def puzex1() -> Puzzle:
    return Puzzle.from_json((DATA / "puzex1.json").read_text())


def test_edge_and_cell_counts():
    for n in range(1, 6):
        assert len(all_edges(n)) == 3 * comb(n + 1, 2)
        assert len(all_cells(n)) == n * n
        nw, ne, s = boundary_edges(n)
        assert len(nw) == len(ne) == len(s) == n


def test_monochromatic_is_valid():
    for n in range(1, 5):
        p = monochromatic(n)
        validate(p)
        nw, ne, s = boundary(p)
        assert str(nw) == str(ne) == str(s) == "1" * n


def test_validation_error_names_cell():
    p = monochromatic(2, d=2)
    labels = dict(p.labels)
    labels[(0, 0, "E")] = 2
    with pytest.raises(PuzzleValidationError) as info:
        validate(Puzzle(n=2, d=2, labels=labels))
    assert info.value.cell is not None


def test_golden_puzzle_is_valid(puzex1):
    validate(puzex1)
    nw, ne, s = boundary(puzex1)
    assert (str(nw), str(ne), str(s)) == ("12132", "23112", "32121")


def test_size2_unique_boundary():
    key = TripleKey(Word.parse("12"), Word.parse("12"), Word.parse("12"))
    count, puzzles = enumerate_puzzles(key, "list")
    assert count == 1
    assert boundary(puzzles[0]) == key.words()


def test_json_round_trip_is_canonical(puzex1):
    text = puzex1.to_json()
    again = Puzzle.from_json(text)
    assert again == puzex1
    assert again.to_json() == text
    obj = json.loads(text)
    keys = [(e["b"], e["a"], e["dir"]) for e in obj["edges"]]
    order = {"E": 0, "NE": 1, "NW": 2}
    assert keys == sorted(keys, key=lambda t: (t[0], t[1], order[t[2]]))


def test_census_formulas(puzex1):
    c = census(puzex1)
    assert c.up == {1: 3, 2: 3, 3: 1}
    assert c.down == {1: 1, 2: 1, 3: 0}
    assert c.rhombi == {(2, 1): 4, (3, 1): 2, (3, 2): 2}
    total_cells = sum(c.up.values()) + sum(c.down.values()) + 2 * sum(c.rhombi.values())
    assert total_cells == 25


def test_census_compass_identity(puzex1):
    from bkpuzzles.words import inversions

    nw, ne, s = boundary(puzex1)
    c = census(puzex1)
    for pair in [(2, 1), (3, 1), (3, 2)]:
        assert c.rhombi_by_dir[pair]["NW"] == inversions(nw)[pair]
        assert c.rhombi_by_dir[pair]["NE"] == inversions(ne)[pair]
        assert c.rhombi_by_dir[pair]["S"] == inversions(dual(s))[pair]


def test_reflect_dual_involution(puzex1):
    q = reflect_dual(puzex1)
    validate(q)
    assert reflect_dual(q) == puzex1
    bq = boundary(q)
    bp = boundary(puzex1)
    assert bq[0] == dual(relabel_reverse(bp[1]))
    assert bq[1] == dual(relabel_reverse(bp[0]))
    assert bq[2] == dual(relabel_reverse(bp[2]))


def test_reflect_dual_monochromatic():
    p = monochromatic(3, letter=1, d=2)
    q = reflect_dual(p)
    assert content(boundary(q)[0]) == (0, 3)


def test_deflate_matches_word_deflation(puzex1):
    for S in [{1, 2}, {1, 3}, {2, 3}, {1}, {1, 2, 3}]:
        dp = deflate_puzzle(puzex1, S)
        validate(dp)
        assert boundary(dp) == tuple(deflate(w, S) for w in boundary(puzex1))
    assert deflate_puzzle(puzex1, {1, 2, 3}) == puzex1
    first = deflate_puzzle(puzex1, {1, 2})
    assert tuple(str(w) for w in boundary(first)) == ("1212", "2112", "2121")


def test_deflate_rejects_empty_set(puzex1):
    with pytest.raises(ValueError):
        deflate_puzzle(puzex1, set())


def test_ambiguate_matches_word_ambiguation(puzex1):
    for classes in ([{1}, {2, 3}], [{1, 2}, {3}]):
        ap = ambiguate_puzzle(puzex1, classes)
        validate(ap)
        assert boundary(ap) == tuple(ambiguate(w, classes) for w in boundary(puzex1))
    singles = ambiguate_puzzle(puzex1, [{1}, {2}, {3}])
    assert singles == puzex1
    merged = ambiguate_puzzle(puzex1, [{1, 2, 3}])
    assert merged == monochromatic(5, letter=1, d=1)
