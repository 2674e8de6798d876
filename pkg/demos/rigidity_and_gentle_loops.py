"""
Rigidity: when is a puzzle the only one with its boundary?
==========================================================

A puzzle is rigid when no other filling shares its boundary.  This can
be decided locally: orient the edges between same-letter regions by
comparing the rhombi on either side, and look for a directed cycle that
never turns sharply (a gentle loop).  A puzzle is rigid exactly when no
gentle loop exists, and a loop is a certificate for a second filling.
"""

from bkpuzzles import (
    TripleKey,
    Word,
    ascii_puzzle,
    enumerate_puzzles,
    has_gentle_loop,
    is_rigid,
)

# A boundary with a unique filling: rigid, no gentle loop.
key = TripleKey(Word.parse("12112"), Word.parse("12112"), Word.parse("21121"))
count, puzzles = enumerate_puzzles(key, "list")
print(f"boundary {key}: {count} filling")
print(ascii_puzzle(puzzles[0]))
loop, witness = has_gentle_loop(puzzles[0])
print(f"gentle loop: {loop}, rigid: {is_rigid(puzzles[0])}")
print()

# A boundary with two fillings: each filling carries a gentle loop whose
# edges are exactly where the two fillings differ.
key = TripleKey(Word.parse("121212"), Word.parse("121212"), Word.parse("212121"))
count, puzzles = enumerate_puzzles(key, "list")
print(f"boundary {key}: {count} fillings")
for p in puzzles:
    loop, witness = has_gentle_loop(p)
    print(f"  gentle loop: {loop}, witness of {len(witness)} edges")
    assert loop and not is_rigid(p)
