"""Independent ground truth for puzzle counts.

Two unrelated computations of the same numbers: exact Schubert-polynomial
arithmetic (divided differences, coefficient extraction) for arbitrary flag
manifolds, and a lattice-word tableau counter for the Grassmannian case.
The tiling enumerator is checked against both.
"""

from __future__ import annotations

import functools
from typing import Iterable, Sequence

from bkpuzzles.words import Word, content, inversions, w_of

Perm = tuple[int, ...]
Monomial = tuple[int, ...]
Polynomial = dict[Monomial, int]


# ---------------------------------------------------------------------------
# permutations (one-line notation, 1-based values)

def perm_inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for i, x in enumerate(w):
        inv[x - 1] = i + 1
    return tuple(inv)


def perm_mult(u: Perm, v: Perm) -> Perm:
    """(u * v)(i) = u(v(i)); u and v must have the same size."""
    return tuple(u[v[i] - 1] for i in range(len(v)))


def perm_length(w: Perm) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def longest_perm(m: int) -> Perm:
    return tuple(range(m, 0, -1))


def reduced_word(w: Perm) -> tuple[int, ...]:
    """A reduced word (i_1, ..., i_k) with w = s_{i_1} ... s_{i_k}.

    Built greedily: repeatedly remove the leftmost descent.
    """
    w = list(w)
    word: list[int] = []
    changed = True
    while changed:
        changed = False
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i + 1)
                changed = True
                break
    return tuple(reversed(word))


def lehmer_code(w: Perm) -> tuple[int, ...]:
    return tuple(
        sum(1 for j in range(i + 1, len(w)) if w[j] < w[i]) for i in range(len(w))
    )


def perm_from_code(code: Sequence[int]) -> Perm:
    """The permutation with the given Lehmer code (padded with fixed points)."""
    m = len(code)
    while m < max((c + i + 1 for i, c in enumerate(code)), default=0):
        m += 1
    available = list(range(1, m + 1))
    out = []
    for i in range(m):
        c = code[i] if i < len(code) else 0
        out.append(available.pop(c))
    return tuple(out)


def trim_perm(w: Perm) -> Perm:
    """Drop trailing fixed points, for use as a canonical cache key."""
    m = len(w)
    while m > 0 and w[m - 1] == m:
        m -= 1
    return w[:m]


def pad_perm(w: Perm, m: int) -> Perm:
    return w + tuple(range(len(w) + 1, m + 1))


# ---------------------------------------------------------------------------
# exact multivariate polynomials as {exponent tuple: int}

def poly_mult(f: Polynomial, g: Polynomial) -> Polynomial:
    out: Polynomial = {}
    for ea, ca in f.items():
        for eb, cb in g.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            c = out.get(key, 0) + ca * cb
            if c:
                out[key] = c
            else:
                out.pop(key, None)
    return out


def divided_difference(f: Polynomial, i: int) -> Polynomial:
    """The operator (f - s_i f) / (x_i - x_{i+1}), exact on each monomial."""
    out: Polynomial = {}
    a = i - 1
    b = i
    for expo, c in f.items():
        p, q = expo[a], expo[b]
        if p == q:
            continue
        sign = 1 if p > q else -1
        lo, hi = min(p, q), max(p, q)
        rest = list(expo)
        for t in range(lo, hi):
            rest[a] = t
            rest[b] = p + q - 1 - t
            key = tuple(rest)
            cc = out.get(key, 0) + sign * c
            if cc:
                out[key] = cc
            else:
                out.pop(key, None)
    return out


@functools.lru_cache(maxsize=None)
def schubert(w: Perm) -> "tuple[tuple[Monomial, int], ...]":
    """The Schubert polynomial of w, frozen as sorted (monomial, coeff) pairs.

    Computed from the staircase monomial for the longest element by divided
    differences; every division is exact.
    """
    w = trim_perm(tuple(w))
    m = max(len(w), 1)
    w_full = pad_perm(w, m)
    w0 = longest_perm(m)
    top: Polynomial = {tuple(m - 1 - i for i in range(m)): 1}
    u = perm_mult(perm_inverse(w_full), w0)
    f = top
    for i in reversed(reduced_word(u)):
        f = divided_difference(f, i)
    return tuple(sorted(f.items()))


def schubert_poly(w: Perm, nvars: int) -> Polynomial:
    """schubert(w) padded out to nvars variables."""
    out: Polynomial = {}
    for expo, c in schubert(trim_perm(w)):
        if len(expo) > nvars and any(expo[nvars:]):
            raise ValueError(f"Schubert polynomial of {w} needs more than {nvars} variables")
        out[tuple(expo[:nvars]) + (0,) * (nvars - len(expo))] = c
    return out


def _trim_zeros(expo: Iterable[int]) -> Monomial:
    expo = tuple(expo)
    m = len(expo)
    while m > 0 and expo[m - 1] == 0:
        m -= 1
    return expo[:m]


def _revlex_key(expo: Monomial, width: int) -> tuple[int, ...]:
    return tuple(reversed(expo + (0,) * (width - len(expo))))


def expand_in_schuberts(f: Polynomial) -> dict[Perm, int]:
    """Write f as an integer combination of Schubert polynomials.

    Repeatedly strips the reverse-lexicographically greatest monomial, which
    for a Schubert polynomial is the Lehmer-code monomial of its permutation.
    """
    g: Polynomial = {}
    for expo, c in f.items():
        if c:
            g[_trim_zeros(expo)] = c
    out: dict[Perm, int] = {}
    while g:
        width = max(len(e) for e in g)
        expo = max(g, key=lambda e: _revlex_key(e, width))
        c = g[expo]
        w = trim_perm(perm_from_code(expo))
        if _trim_zeros(lehmer_code(w)) != expo:
            raise RuntimeError(f"monomial {expo} is not a Lehmer code")
        out[w] = c
        for mon, cc in schubert(w):
            key = _trim_zeros(mon)
            v = g.get(key, 0) - c * cc
            if v:
                g[key] = v
            else:
                g.pop(key, None)
        if expo in g:
            raise RuntimeError("Schubert expansion failed to cancel its leading monomial")
    return out


# ---------------------------------------------------------------------------
# cup product structure constants

@functools.lru_cache(maxsize=None)
def _schubert_product_expansion(u: Perm, v: Perm, nvars: int) -> tuple[tuple[Perm, int], ...]:
    f = poly_mult(schubert_poly(u, nvars), schubert_poly(v, nvars))
    return tuple(sorted(expand_in_schuberts(f).items()))


def schubert_product(u: Perm, v: Perm, nvars: int) -> dict[Perm, int]:
    """The Schubert-basis expansion of S_u * S_v (permutations trimmed)."""
    return dict(_schubert_product_expansion(trim_perm(u), trim_perm(v), nvars))


def cup_constant(pi: Word, rho: Word, sigma: Word) -> int:
    """The cup-product structure constant c_{pi,rho}^{sigma}.

    Coefficient of the sigma class in the product of the pi and rho classes,
    via exact Schubert-polynomial arithmetic.  Mismatched contents give 0.
    """
    if content(pi) != content(rho) or content(pi) != content(sigma):
        return 0
    if inversions(pi).total + inversions(rho).total != inversions(sigma).total:
        return 0
    n = len(pi)
    product = schubert_product(w_of(pi), w_of(rho), n)
    return product.get(trim_perm(w_of(sigma)), 0)


def additivity_holds(pi: Word, rho: Word, sigma: Word) -> bool:
    """Whether inv_ij(pi) + inv_ij(rho) = inv_ij(sigma) for every pair i > j."""
    ti, tr, ts = inversions(pi), inversions(rho), inversions(sigma)
    d = pi.d
    return all(
        ti[(i, j)] + tr[(i, j)] == ts[(i, j)]
        for i in range(2, d + 1)
        for j in range(1, i)
    )


def bk_constant(pi: Word, rho: Word, sigma: Word) -> int:
    """The Belkale-Kumar structure constant: the cup constant if every
    ij-inversion count is additive, else 0."""
    if content(pi) != content(rho) or content(pi) != content(sigma):
        return 0
    if not additivity_holds(pi, rho, sigma):
        return 0
    return cup_constant(pi, rho, sigma)


def criterion_equiv(pi: Word, rho: Word, sigma: Word) -> tuple[bool, bool]:
    """Evaluate the two numerical criteria for a triple with nonzero cup
    constant: per-pair inversion additivity, and the per-cut sum condition
    sum_{j <= l < i} (inv_ij(pi) + inv_ij(rho) - inv_ij(sigma)) = 0 for all l.
    """
    if cup_constant(pi, rho, sigma) == 0:
        raise ValueError("criterion_equiv requires a nonzero cup constant")
    ti, tr, ts = inversions(pi), inversions(rho), inversions(sigma)
    d = pi.d
    pairwise = all(
        ti[(i, j)] + tr[(i, j)] == ts[(i, j)]
        for i in range(2, d + 1)
        for j in range(1, i)
    )
    per_cut = all(
        sum(
            ti[(i, j)] + tr[(i, j)] - ts[(i, j)]
            for i in range(l + 1, d + 1)
            for j in range(1, l + 1)
        )
        == 0
        for l in range(1, d)
    )
    return pairwise, per_cut


# ---------------------------------------------------------------------------
# Littlewood-Richardson tableau counter (Grassmannian oracle)

def _is_partition(p: Sequence[int]) -> bool:
    return all(p[i] >= p[i + 1] for i in range(len(p) - 1)) and all(x >= 0 for x in p)


def lr_tableau(
    lam: Sequence[int],
    mu: Sequence[int],
    nu: Sequence[int],
    k: int | None = None,
    n: int | None = None,
) -> int:
    """The Littlewood-Richardson number c_{lam,mu}^{nu}.

    Counts skew tableaux of shape nu/lam and content mu that are weakly
    increasing along rows, strictly increasing down columns, and whose
    right-to-left, top-to-bottom reading word is a lattice word.

    If k and n are given, all three partitions must fit in the k x (n-k) box.
    """
    lam = tuple(x for x in lam)
    mu = tuple(x for x in mu)
    nu = tuple(x for x in nu)
    for p in (lam, mu, nu):
        if not _is_partition(p):
            raise ValueError(f"{p} is not a partition")
        if k is not None and n is not None:
            if len([x for x in p if x > 0]) > k or any(x > n - k for x in p):
                raise ValueError(f"{p} does not fit in the {k}x{n - k} box")
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    rows = max(len(nu), len(lam))
    if rows == 0:
        return 1
    nu = nu + (0,) * (rows - len(nu))
    lam = lam + (0,) * (rows - len(lam))
    if any(nu[r] < lam[r] for r in range(rows)):
        return 0
    m = len(mu)
    remaining = list(mu)
    # column[c] = entry directly above the next cell in column c (0 = none yet)
    above = [[0] * nu[r] for r in range(rows)]
    for r in range(1, rows):
        for c in range(lam[r], nu[r]):
            above[r][c] = -1  # filled in during search
    count = 0
    # prefix counts for the lattice condition, updated cell by cell in
    # reading order (right to left within each row, top row first)
    seen = [0] * (m + 1)

    def fill(r: int, c: int, left_entry: int) -> None:
        nonlocal count
        if r == rows:
            count += 1
            return
        if c < lam[r]:
            fill(r + 1, nu[r + 1] - 1 if r + 1 < rows else 0, 0)
            return
        up = above[r - 1][c] if r > 0 and c < len(above[r - 1]) else 0
        lo = up + 1
        hi = min(left_entry, m) if left_entry else m
        for entry in range(lo, hi + 1):
            if remaining[entry - 1] == 0:
                continue
            if entry > 1 and seen[entry] + 1 > seen[entry - 1]:
                continue
            remaining[entry - 1] -= 1
            seen[entry] += 1
            above[r][c] = entry
            fill(r, c - 1, entry)
            above[r][c] = -1
            seen[entry] -= 1
            remaining[entry - 1] += 1

    start_row = 0
    fill(start_row, nu[0] - 1 if nu[0] else -1, 0)
    return count


def word_partition(w: Word, k: int, n: int) -> tuple[int, ...]:
    """The partition indexing the Grassmannian Schubert class of a 2-letter word.

    For a word of content (k, n-k), row r of the partition counts the 2s
    standing before the (k+1-r)-th 1; the total is inv_21(w).
    """
    if w.d != 2 or content(w) != (k, n - k):
        raise ValueError(f"word {w} does not have content ({k}, {n - k})")
    ones = [p for p, x in enumerate(w.letters, start=1) if x == 1]
    lam = tuple(ones[k - 1 - r] - (k - r) for r in range(k))
    return tuple(x for x in lam if x > 0)


def partition_word(lam: Sequence[int], k: int, n: int) -> Word:
    """Inverse of :func:`word_partition`: the 2-letter word for a partition."""
    lam = tuple(lam) + (0,) * (k - len(lam))
    if len([x for x in lam if x > 0]) > k or any(x > n - k for x in lam):
        raise ValueError(f"{lam} does not fit in the {k}x{n - k} box")
    ones = sorted(lam[r] + (k - r) for r in range(k))
    letters = [2] * n
    for p in ones:
        letters[p - 1] = 1
    return Word(tuple(letters), 2)


def grassmannian_lr(pi: Word, rho: Word, sigma: Word) -> int:
    """Tableau-oracle value for a 2-letter puzzle boundary triple."""
    cont = content(pi)
    if content(rho) != cont or content(sigma) != cont:
        return 0
    k, nk = cont
    n = k + nk
    if k == 0 or nk == 0:
        return 1 if pi == rho == sigma else 0
    lam = word_partition(pi, k, n)
    mu = word_partition(rho, k, n)
    nu = word_partition(sigma, k, n)
    return lr_tableau(lam, mu, nu, k, n)
