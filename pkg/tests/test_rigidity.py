import pytest

from bkpuzzles.board import monochromatic
from bkpuzzles.rigidity import (
    has_gentle_loop,
    is_rigid,
    is_rigid_by_count,
    orient,
    pieces_of,
)
from bkpuzzles.search import TripleKey, enumerate_all, enumerate_puzzles
from bkpuzzles.words import Word


def key_of(nw: str, ne: str, s: str) -> TripleKey:
    words = [Word.parse(text) for text in (nw, ne, s)]
    d = max(w.d for w in words)
    return TripleKey(*(Word(w.letters, d) for w in words))


def test_monochromatic_graph_is_empty():
    graph = orient(monochromatic(3))
    assert graph.nodes == []
    assert not has_gentle_loop(monochromatic(3))[0]
    assert is_rigid(monochromatic(3))


def test_pieces_cover_the_board():
    _, puzzles = enumerate_puzzles(key_of("12132", "23112", "32121"), "list")
    pieces, cell_piece = pieces_of(puzzles[0])
    assert len(cell_piece) == 25
    cells = sum(len(piece.cells) for piece in pieces)
    assert cells == 25


def test_single_rhombus_orientation():
    # boundary (12, 21, 21): one rhombus flanked by two triangle regions;
    # both region edges point toward the rhombus's obtuse corners (the
    # waist endpoints)
    count, puzzles = enumerate_puzzles(key_of("12", "21", "21"), "list")
    assert count == 1
    graph = orient(puzzles[0])
    assert len(graph.nodes) == 2
    waist = next(e for e, lab in puzzles[0].labels.items() if isinstance(lab, tuple))
    from bkpuzzles.board import edge_endpoints

    obtuse = set(edge_endpoints(waist))
    for node in graph.nodes:
        assert node.head in obtuse


def test_no_reversed_duplicate_nodes():
    _, puzzles = enumerate_puzzles(key_of("12132", "23112", "32121"), "list")
    graph = orient(puzzles[0])
    seen = {(node.tail, node.head) for node in graph.nodes}
    assert all((head, tail) not in seen for tail, head in seen)


@pytest.mark.parametrize(
    "nw, ne, s",
    [
        ("12132", "23112", "32121"),
        ("12112", "12112", "21121"),
        ("12", "12", "12"),
    ],
)
def test_rigid_instances(nw, ne, s):
    _, puzzles = enumerate_puzzles(key_of(nw, ne, s), "list")
    assert len(puzzles) == 1
    assert is_rigid(puzzles[0])
    assert is_rigid_by_count(puzzles[0])


def test_multiplicity_two_boundary_is_floppy():
    count, puzzles = enumerate_puzzles(key_of("121212", "121212", "212121"), "list")
    assert count == 2
    for p in puzzles:
        loop, witness = has_gentle_loop(p)
        assert loop
        assert witness, "a loop must come with a witness cycle"
        # the witness is a closed gentle walk in the directed graph
        heads = [node.head for node in witness]
        tails = [node.tail for node in witness]
        assert heads[-1] == tails[0]
        assert all(heads[i] == tails[i + 1] for i in range(len(witness) - 1))
        assert not is_rigid(p)
        assert not is_rigid_by_count(p)


@pytest.mark.parametrize("n,d", [(3, 2), (4, 2), (4, 3), (5, 2)])
def test_loop_criterion_matches_uniqueness(n, d):
    for puzzles in enumerate_all(n, d, collect=True).values():
        unique = len(puzzles) == 1
        for p in puzzles:
            assert is_rigid(p) == unique
