"""
Drawing puzzles as ASCII art and SVG
====================================

Puzzles render three ways: compact ASCII for the terminal, SVG for
anything better, and canonical JSON for persistence.  The SVG output is
byte-for-byte deterministic, so renders can be snapshot-tested; with
``arrows=True`` the rigidity orientation of the region edges is drawn
on top, making gentle loops visible.
"""

from pathlib import Path

from bkpuzzles import TripleKey, Word, ascii_puzzle, enumerate_puzzles, render

key = TripleKey(Word.parse("121212"), Word.parse("121212"), Word.parse("212121"))
count, puzzles = enumerate_puzzles(key, "list")
print(f"boundary {key}: {count} fillings\n")

for p in puzzles:
    print(ascii_puzzle(p))
    print()

# Write the first filling as SVG (with orientation arrows) and as JSON.
out = Path("puzzle_demo.svg")
out.write_text(render(puzzles[0], "svg", arrows=True) + "\n")
print(f"wrote {out} ({out.stat().st_size} bytes)")

print(render(puzzles[0], "json")[:100] + "...")
