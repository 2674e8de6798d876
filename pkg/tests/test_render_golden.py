from pathlib import Path

import pytest

from bkpuzzles.board import Puzzle, monochromatic
from bkpuzzles.render import ascii_puzzle, render, svg_puzzle

DATA = Path(__file__).resolve().parent.parent / "src" / "bkpuzzles" / "data"
GOLDEN = Path(__file__).resolve().parent / "golden"


@pytest.fixture(scope="module")
def puzex1() -> Puzzle:
    return Puzzle.from_json((DATA / "puzex1.json").read_text())


def test_monochromatic_ascii():
    art = ascii_puzzle(monochromatic(2))
    assert art.splitlines() == ["  /11\\", "   1", "/11\\/11\\", " 1   1"]


def test_ascii_matches_golden(puzex1):
    golden = (GOLDEN / "puzex1.ascii").read_text()
    assert ascii_puzzle(puzex1) + "\n" == golden


def test_svg_matches_golden(puzex1):
    golden = (GOLDEN / "puzex1.svg").read_text()
    assert svg_puzzle(puzex1, arrows=True) + "\n" == golden


def test_svg_structure(puzex1):
    svg = svg_puzzle(puzex1, arrows=True)
    plain = svg_puzzle(puzex1, arrows=False)
    # one polygon per unit cell, plus one arrowhead per oriented region edge
    assert plain.count("<polygon") == 25
    assert svg.count("<polygon") > 25
    assert svg.startswith("<svg ") and svg.endswith("</svg>")


def test_render_is_byte_stable(puzex1):
    for fmt in ("ascii", "svg", "json"):
        assert render(puzex1, fmt, arrows=True) == render(puzex1, fmt, arrows=True)


def test_render_rejects_unknown_format(puzex1):
    with pytest.raises(ValueError):
        render(puzex1, "png")
