"""The acceptance sweep: eleven exhaustively checked properties.

Each criterion is a pure function returning a result record; ``run_all``
drives them for the ``selftest`` CLI command, and the acceptance test
suite asserts each one individually.  All checks are exact (integer
equality); the sweep bounds below are the pinned ones, and ``max_n`` /
``max_d`` can only shrink them.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from math import comb

from bkpuzzles.oracle import (
    bk_constant,
    criterion_equiv,
    cup_constant,
    grassmannian_lr,
    lr_tableau,
)
from bkpuzzles.board import boundary, census, reflect_dual
from bkpuzzles.cone import facets, member
from bkpuzzles.rigidity import has_gentle_loop, is_rigid
from bkpuzzles.search import (
    TripleKey,
    assembly_tuple,
    bk_coefficient,
    deflate_key,
    ambiguate_key,
    enumerate_all,
    enumerate_puzzles,
    letter_pairs,
)
from bkpuzzles.words import Word, all_words, content, dual, inversions, relabel_reverse


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    ok: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"[{status}] criterion {self.number:2d} ({self.name}): {self.detail} [{self.seconds:.1f}s]"


def _compositions(total: int, parts: int):
    """All non-negative integer compositions of ``total`` into ``parts``."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _additive(ti, tr, ts, d) -> bool:
    return all(
        ti[(i, j)] + tr[(i, j)] == ts[(i, j)] for i, j in letter_pairs(d)
    )


_PUZEX_KEY = TripleKey(Word.parse("12132"), Word.parse("23112"), Word.parse("32121"))


def criterion_1(max_n=None, max_d=None) -> CriterionResult:
    """The size-5 three-letter instance: count 1, pair deflations all 1."""
    count = enumerate_puzzles(_PUZEX_KEY, "count")
    pair_counts = {
        (i, j): enumerate_puzzles(deflate_key(_PUZEX_KEY, {i, j}), "count")
        for i, j in letter_pairs(3)
    }
    product = 1
    for v in pair_counts.values():
        product *= v
    ok = count == 1 and all(v == 1 for v in pair_counts.values()) and product == count
    return _result(1, "size-5 instance", ok, f"count={count} pairs={pair_counts}")


def criterion_2(max_n=None, max_d=None) -> CriterionResult:
    """The unique (12112, 12112, 21121) puzzle is rigid and loop-free."""
    key = TripleKey(Word.parse("12112"), Word.parse("12112"), Word.parse("21121"))
    count, puzzles = enumerate_puzzles(key, "list")
    ok = count == 1
    if ok:
        loop, _ = has_gentle_loop(puzzles[0])
        ok = not loop and is_rigid(puzzles[0])
    return _result(2, "rigid instance", ok, f"count={count}")


def criterion_3(max_n=None, max_d=None) -> CriterionResult:
    """Puzzle count equals the Schubert-oracle constant on all triples."""
    top_n = min(5, max_n or 5)
    top_d = min(3, max_d or 3)
    checked = 0
    bad = 0
    for n in range(1, top_n + 1):
        for d in range(1, top_d + 1):
            counts = enumerate_all(n, d, collect=False)
            for cont in _compositions(n, d):
                words = all_words(cont)
                for a, b, c in itertools.product(words, repeat=3):
                    expected = bk_constant(a, b, c)
                    actual = counts.get((a.letters, b.letters, c.letters), 0)
                    checked += 1
                    if expected != actual:
                        bad += 1
    return _result(3, "oracle equivalence", bad == 0, f"{checked} triples, {bad} mismatches")


def criterion_4(max_n=None, max_d=None) -> CriterionResult:
    """Two-letter counts match the tableau oracle up to n = 7."""
    top_n = min(7, max_n or 7)
    checked = 0
    bad = 0
    for n in range(1, top_n + 1):
        counts = enumerate_all(n, 2, collect=False)
        for k in range(0, n + 1):
            words = all_words((k, n - k))
            for a, b, c in itertools.product(words, repeat=3):
                expected = grassmannian_lr(a, b, c)
                actual = counts.get((a.letters, b.letters, c.letters), 0)
                checked += 1
                if expected != actual:
                    bad += 1
    return _result(4, "tableau ground truth", bad == 0, f"{checked} triples, {bad} mismatches")


def criterion_5(max_n=None, max_d=None) -> CriterionResult:
    """Factorization into pair counts, plus injectivity of assembly."""
    top_n = min(5, max_n or 5)
    checked = 0
    bad = 0
    for n in range(1, top_n + 1):
        counts = enumerate_all(n, 3, collect=False)
        grouped = enumerate_all(n, 3, collect=True)
        for cont in _compositions(n, 3):
            words = all_words(cont)
            tables = {w: inversions(w) for w in words}
            for a, b, c in itertools.product(words, repeat=3):
                if not _additive(tables[a], tables[b], tables[c], 3):
                    continue
                key = TripleKey(a, b, c)
                product = 1
                for i, j in letter_pairs(3):
                    product *= bk_coefficient(deflate_key(key, {i, j}))
                checked += 1
                if product != counts.get((a.letters, b.letters, c.letters), 0):
                    bad += 1
        for puzzles in grouped.values():
            tuples = [assembly_tuple(p) for p in puzzles]
            if len(set(tuples)) != len(tuples):
                bad += 1
    return _result(5, "factorization+assembly", bad == 0, f"{checked} additive triples, {bad} failures")


def criterion_6(max_n=None, max_d=None) -> CriterionResult:
    """Coarse multiplicativity for both interval partitions of {1,2,3}.

    Scoped to Levi-movable triples (inversion additivity and a nonzero
    count), the hypothesis of the underlying product formula.
    """
    top_n = min(5, max_n or 5)
    partitions = ([{1}, {2, 3}], [{1, 2}, {3}])
    checked = 0
    bad = 0
    for n in range(1, top_n + 1):
        counts = enumerate_all(n, 3, collect=False)
        for cont in _compositions(n, 3):
            words = all_words(cont)
            tables = {w: inversions(w) for w in words}
            for a, b, c in itertools.product(words, repeat=3):
                count = counts.get((a.letters, b.letters, c.letters), 0)
                if count == 0 or not _additive(tables[a], tables[b], tables[c], 3):
                    continue
                key = TripleKey(a, b, c)
                checked += 1
                for classes in partitions:
                    rhs = bk_coefficient(ambiguate_key(key, classes))
                    for cls in classes:
                        rhs *= bk_coefficient(deflate_key(key, cls))
                    if rhs != count:
                        bad += 1
    return _result(6, "coarse product", bad == 0, f"{checked} Levi-movable triples, {bad} failures")


def criterion_7(max_n=None, max_d=None) -> CriterionResult:
    """Census identities on every enumerated puzzle.

    Triangle counts (n_i+1 choose 2) up / (n_i choose 2) down, rhombus
    totals n_i n_j, and compass counts equal to the ij-inversions of each
    side read clockwise (on the S side, clockwise is right to left).
    """
    top_n = min(5, max_n or 5)
    top_d = min(3, max_d or 3)
    checked = 0
    bad = 0
    for n in range(1, top_n + 1):
        for d in range(1, top_d + 1):
            for puzzles in enumerate_all(n, d, collect=True).values():
                for p in puzzles:
                    checked += 1
                    c = census(p)
                    nw, ne, s = boundary(p)
                    cont = content(s)
                    inv_nw, inv_ne = inversions(nw), inversions(ne)
                    inv_s = inversions(dual(s))
                    ok = all(
                        c.up.get(i, 0) == comb(cont[i - 1] + 1, 2)
                        and c.down.get(i, 0) == comb(cont[i - 1], 2)
                        for i in range(1, d + 1)
                    )
                    for i, j in letter_pairs(d):
                        by_dir = c.rhombi_by_dir.get((i, j), {"S": 0, "NE": 0, "NW": 0})
                        ok = ok and c.rhombi.get((i, j), 0) == cont[i - 1] * cont[j - 1]
                        ok = ok and by_dir["NW"] == inv_nw[(i, j)]
                        ok = ok and by_dir["NE"] == inv_ne[(i, j)]
                        ok = ok and by_dir["S"] == inv_s[(i, j)]
                    if not ok:
                        bad += 1
    return _result(7, "census", bad == 0, f"{checked} puzzles, {bad} failures")


def criterion_8(max_n=None, max_d=None) -> CriterionResult:
    """No gentle loop iff the boundary has a unique filling."""
    top_n = min(5, max_n or 5)
    top_d = min(3, max_d or 3)
    sweeps = [(n, d) for n in range(1, top_n + 1) for d in range(1, top_d + 1)]
    if (max_n or 6) >= 6:
        sweeps.append((6, 2))
    checked = 0
    bad = 0
    for n, d in sweeps:
        for puzzles in enumerate_all(n, d, collect=True).values():
            unique = len(puzzles) == 1
            for p in puzzles:
                checked += 1
                if is_rigid(p) != unique:
                    bad += 1
    return _result(8, "rigidity", bad == 0, f"{checked} puzzles, {bad} failures")


def criterion_9(max_n=None, max_d=None) -> CriterionResult:
    """Pairwise additivity iff the per-cut sums vanish, when cup != 0."""
    top_n = min(5, max_n or 5)
    checked = 0
    bad = 0
    for n in range(1, top_n + 1):
        for cont in _compositions(n, 3):
            words = all_words(cont)
            for a, b, c in itertools.product(words, repeat=3):
                if cup_constant(a, b, c) == 0:
                    continue
                checked += 1
                pairwise, per_cut = criterion_equiv(a, b, c)
                if pairwise != per_cut:
                    bad += 1
    return _result(9, "criterion equivalence", bad == 0, f"{checked} nonzero-cup triples, {bad} failures")


def criterion_10(max_n=None, max_d=None) -> CriterionResult:
    """Cone membership agrees with positivity of the tensor invariant.

    The box: lam and mu run over partitions with at most n parts, entries
    at most 2; nu is the negated reverse of a partition nu* with
    |nu*| = |lam| + |mu| and entries at most 4.  By the shift invariance
    of the cone this covers a representative box of integral triples, and
    the invariant for such spectra is the Littlewood-Richardson number
    c_{lam,mu}^{nu*} (saturation makes positivity the membership test).
    """
    top_n = min(4, max_n or 4)
    checked = 0
    bad = 0
    for n in range(1, top_n + 1):
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
        for lam in box:
            for mu in box:
                weight = sum(lam) + sum(mu)
                for nustar in targets:
                    if sum(nustar) != weight:
                        continue
                    nu = tuple(-x for x in reversed(nustar))
                    checked += 1
                    positive = lr_tableau(lam, mu, nustar) > 0
                    if positive != member(lam, mu, nu, n):
                        bad += 1
    return _result(10, "cone membership", bad == 0, f"{checked} box triples, {bad} failures")


def criterion_11(max_n=None, max_d=None) -> CriterionResult:
    """Counts are invariant under the reflect-and-relabel duality."""
    top_n = min(5, max_n or 5)
    checked = 0
    bad = 0
    for n in range(1, top_n + 1):
        for d in range(1, (min(max_d, n) if max_d else n) + 1):
            counts = enumerate_all(n, d, collect=False)
            for (nw, ne, s), value in counts.items():
                key = TripleKey(Word(nw, d), Word(ne, d), Word(s, d))
                rc = [dual(relabel_reverse(w)) for w in key.words()]
                dual_key = (rc[1].letters, rc[0].letters, rc[2].letters)
                checked += 1
                if counts.get(dual_key, 0) != value:
                    bad += 1
    return _result(11, "duality", bad == 0, f"{checked} boundaries, {bad} failures")


_CRITERIA = [
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
    criterion_11,
]

_START: dict = {}


def _result(number, name, ok, detail) -> CriterionResult:
    elapsed = time.monotonic() - _START.pop(number, time.monotonic())
    return CriterionResult(number=number, name=name, ok=ok, detail=detail, seconds=elapsed)


def run_criterion(number: int, max_n=None, max_d=None) -> CriterionResult:
    """Run one acceptance criterion (1-based)."""
    _START[number] = time.monotonic()
    return _CRITERIA[number - 1](max_n=max_n, max_d=max_d)


def run_all(max_n=None, max_d=None, jobs: int = 1) -> list[CriterionResult]:
    """Run every criterion, optionally across worker processes."""
    numbers = list(range(1, len(_CRITERIA) + 1))
    if jobs and jobs > 1:
        import concurrent.futures
        import functools

        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            worker = functools.partial(run_criterion, max_n=max_n, max_d=max_d)
            return list(pool.map(worker, numbers))
    return [run_criterion(k, max_n=max_n, max_d=max_d) for k in numbers]
