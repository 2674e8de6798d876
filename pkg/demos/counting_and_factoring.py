"""
Counting puzzles and factoring into two-letter pieces
=====================================================

A boundary triple of words determines a (possibly empty) set of puzzle
fillings, and the number of fillings is a structure constant.  When the
inversion counts of the three sides are additive pair by pair, that
number factors into a product of two-letter counts, one per pair of
letters, obtained by deflating the boundary to each pair.
"""

import itertools

from bkpuzzles import (
    TripleKey,
    Word,
    deflate_key,
    enumerate_puzzles,
    inversions,
    letter_pairs,
)

# A three-letter boundary with exactly one filling.
key = TripleKey(Word.parse("12132"), Word.parse("23112"), Word.parse("32121"))
count = enumerate_puzzles(key, "count")
print(f"boundary {key}: {count} filling(s)")

# Additivity: the inversion table of the S side is the entrywise sum of
# the NW and NE tables.  This is the hypothesis of the factorization.
nw, ne, s = (inversions(w) for w in key.words())
for pair in letter_pairs(3):
    print(f"  inv_{pair[0]}{pair[1]}: {nw[pair]} + {ne[pair]} = {s[pair]}")

# Deflate to each pair of letters and multiply the two-letter counts.
product = 1
for i, j in letter_pairs(3):
    piece = deflate_key(key, {i, j})
    piece_count = enumerate_puzzles(piece, "count")
    product *= piece_count
    print(f"  deflation to {{{j},{i}}}: {piece} -> {piece_count}")
print(f"product of pieces = {product} (matches the count: {product == count})")

# A non-additive triple has no fillings at all, whatever the pieces say.
for a, b, c in itertools.product(["213", "132", "321"], repeat=3):
    triple = TripleKey(Word.parse(a), Word.parse(b), Word.parse(c))
    tables = [inversions(w) for w in triple.words()]
    additive = all(
        tables[0][p] + tables[1][p] == tables[2][p] for p in letter_pairs(3)
    )
    if not additive:
        assert enumerate_puzzles(triple, "count") == 0
print("every non-additive triple in the sample has count 0")
