"""Belkale-Kumar structure constants for GL_n partial flag manifolds.

Counts BK-puzzles by exhaustive tiling search, factors the counts into
Littlewood-Richardson numbers via deflation, decides rigidity through
gentle-loop detection, and emits the puzzle inequalities cutting out the
Littlewood-Richardson cone.  Every number can be cross-checked against
independent Schubert-calculus oracles.
"""

from bkpuzzles.words import Word, content, w_of, inversions, deflate, ambiguate, dual
from bkpuzzles.words import all_words
from bkpuzzles.board import Puzzle, validate, boundary, census, reflect_dual
from bkpuzzles.board import deflate_puzzle, ambiguate_puzzle
from bkpuzzles.search import TripleKey, enumerate_puzzles, bk_coefficient
from bkpuzzles.search import factor_check, assembly_tuple, coarse_check
from bkpuzzles.search import deflate_key, ambiguate_key, enumerate_all, letter_pairs
from bkpuzzles.oracle import cup_constant, bk_constant, lr_tableau, word_partition
from bkpuzzles.rigidity import orient, has_gentle_loop, is_rigid
from bkpuzzles.cone import Inequality, facets, face_from_puzzle, member
from bkpuzzles.render import ascii_puzzle, svg_puzzle, render

__version__ = "0.1.0"

__all__ = [
    "Word", "content", "w_of", "inversions", "deflate", "ambiguate", "dual",
    "all_words",
    "Puzzle", "validate", "boundary", "census", "reflect_dual",
    "deflate_puzzle", "ambiguate_puzzle",
    "TripleKey", "enumerate_puzzles", "bk_coefficient",
    "factor_check", "assembly_tuple", "coarse_check",
    "deflate_key", "ambiguate_key", "enumerate_all", "letter_pairs",
    "cup_constant", "bk_constant", "lr_tableau", "word_partition",
    "orient", "has_gentle_loop", "is_rigid",
    "Inequality", "facets", "face_from_puzzle", "member",
    "ascii_puzzle", "svg_puzzle", "render",
]
