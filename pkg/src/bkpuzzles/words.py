"""Words on the ordered alphabet {1..d} and their inversion combinatorics.

A word indexes a Schubert class of a partial flag manifold; its content
records the dimension jumps.  Everything downstream (puzzle boundaries,
coefficient filters, cone inequalities) is driven by the ij-inversion
statistics defined here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Word:
    """A finite sequence of letters from {1..d}, with d carried explicitly.

    >>> Word.parse("12312")
    Word('12312', d=3)
    >>> Word((2, 1, 2), 2).letters
    (2, 1, 2)
    """

    letters: tuple[int, ...]
    d: int

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.d < 0:
            raise ValueError(f"alphabet size must be non-negative, got {self.d}")
        for x in self.letters:
            if not 1 <= x <= self.d:
                raise ValueError(f"letter {x} outside alphabet 1..{self.d}")

    @classmethod
    def parse(cls, text: str, d: int | None = None) -> "Word":
        """Parse a digit string (d <= 9) or comma-separated integers.

        The alphabet size defaults to the largest letter present.
        """
        text = text.strip()
        if text == "":
            letters: tuple[int, ...] = ()
        elif "," in text:
            letters = tuple(int(part) for part in text.split(","))
        else:
            letters = tuple(int(ch) for ch in text)
        if d is None:
            d = max(letters, default=0)
        return cls(letters, d)

    def __str__(self) -> str:
        if self.d <= 9:
            return "".join(str(x) for x in self.letters)
        return ",".join(str(x) for x in self.letters)

    def __repr__(self) -> str:
        return f"Word('{self}', d={self.d})"

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class InversionTable:
    """All ij-inversion counts of a word, the total, and the Y statistic.

    ``y_stat`` is the vector (inv_21, inv_31, ..., inv_d1): the coefficients
    of the formal y-coordinates attached to inversions over the letter 1.
    """

    by_pair: dict[tuple[int, int], int] = field(compare=False)
    total: int = 0
    y_stat: tuple[int, ...] = ()

    def __getitem__(self, pair: tuple[int, int]) -> int:
        return self.by_pair.get(pair, 0)


def content(w: Word) -> tuple[int, ...]:
    """Letter multiplicities (n_1, ..., n_d).

    >>> content(Word.parse("12312"))
    (2, 2, 1)
    """
    counts = [0] * w.d
    for x in w.letters:
        counts[x - 1] += 1
    return tuple(counts)


def w_of(w: Word) -> tuple[int, ...]:
    """The permutation associated to a word, in one-line notation.

    Lists the positions (1-based) of the 1s in order, then the 2s, etc.

    >>> w_of(Word.parse("12312"))
    (1, 4, 2, 5, 3)
    """
    positions: list[int] = []
    for letter in range(1, w.d + 1):
        positions.extend(p + 1 for p, x in enumerate(w.letters) if x == letter)
    return tuple(positions)


def inversions(w: Word) -> InversionTable:
    """Count ij-inversions: position pairs a < b with w[a] = i > j = w[b].

    >>> inversions(Word.parse("12312")).total
    3
    """
    by_pair: dict[tuple[int, int], int] = {}
    for i in range(2, w.d + 1):
        for j in range(1, i):
            by_pair[(i, j)] = 0
    letters = w.letters
    n = len(letters)
    for a in range(n):
        for b in range(a + 1, n):
            if letters[a] > letters[b]:
                by_pair[(letters[a], letters[b])] += 1
    total = sum(by_pair.values())
    y_stat = tuple(by_pair.get((i, 1), 0) for i in range(2, w.d + 1))
    return InversionTable(by_pair=by_pair, total=total, y_stat=y_stat)


def deflate(w: Word, S: Iterable[int]) -> Word:
    """Keep only the letters in S and renormalize the alphabet to 1..|S|.

    >>> str(deflate(Word.parse("12312"), {1, 2}))
    '1212'
    """
    S = sorted(set(S))
    if not S:
        raise ValueError("deflation by the empty letter set")
    for s in S:
        if not 1 <= s <= w.d:
            raise ValueError(f"letter {s} outside alphabet 1..{w.d}")
    rank = {s: r + 1 for r, s in enumerate(S)}
    return Word(tuple(rank[x] for x in w.letters if x in rank), len(S))


def deflation_letters(w: Word, S: Iterable[int]) -> dict[int, int]:
    """Map from renormalized letters 1..|S| back to the original letters."""
    S = sorted(set(S))
    return {r + 1: s for r, s in enumerate(S)}


def interval_classes(classes: Sequence[Iterable[int]], d: int) -> dict[int, int]:
    """Validate an ordered interval partition of 1..d; map letter -> class index.

    Classes must be contiguous intervals covering 1..d in order.
    """
    mapping: dict[int, int] = {}
    expected = 1
    for idx, cls in enumerate(classes, start=1):
        members = sorted(set(cls))
        if members != list(range(expected, expected + len(members))) or not members:
            raise ValueError(f"classes are not an ordered interval partition of 1..{d}")
        for x in members:
            mapping[x] = idx
        expected += len(members)
    if expected != d + 1:
        raise ValueError(f"classes do not cover 1..{d}")
    return mapping


def cut_classes(d: int, i: int) -> list[set[int]]:
    """The two-class partition {1..i}, {i+1..d} (written A_{i]} in rendering)."""
    if not 1 <= i < d:
        raise ValueError(f"cut position {i} outside 1..{d - 1}")
    return [set(range(1, i + 1)), set(range(i + 1, d + 1))]


def ambiguate(w: Word, classes: Sequence[Iterable[int]]) -> Word:
    """Replace each letter by the index of its interval class.

    >>> str(ambiguate(Word.parse("12312"), [{1}, {2, 3}]))
    '12212'
    """
    mapping = interval_classes(classes, w.d)
    return Word(tuple(mapping[x] for x in w.letters), len(classes))


def dual(w: Word) -> Word:
    """The reversed word.

    >>> str(dual(Word.parse("12132")))
    '23121'
    """
    return Word(tuple(reversed(w.letters)), w.d)


def relabel_reverse(w: Word) -> Word:
    """Reverse the order on letters: i -> d + 1 - i."""
    return Word(tuple(w.d + 1 - x for x in w.letters), w.d)


def all_words(cont: Sequence[int]) -> list[Word]:
    """All words with the given content, in lexicographic order."""
    d = len(cont)
    out: list[Word] = []

    def extend(prefix: list[int], remaining: list[int]):
        if not any(remaining):
            out.append(Word(tuple(prefix), d))
            return
        for letter in range(1, d + 1):
            if remaining[letter - 1] > 0:
                remaining[letter - 1] -= 1
                prefix.append(letter)
                extend(prefix, remaining)
                prefix.pop()
                remaining[letter - 1] += 1

    extend([], list(cont))
    return out
