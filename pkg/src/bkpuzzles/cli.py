"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
Commands mirror the library surface: counting and listing puzzles,
factorization and oracle cross-checks, rigidity reports, cone facets,
faces and membership, and the full acceptance self-test.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from bkpuzzles.board import Puzzle, boundary, validate
from bkpuzzles.cache import CoeffCache, default_cache_path
from bkpuzzles.cone import face_from_puzzle, facets, member
from bkpuzzles.oracle import bk_constant, cup_constant
from bkpuzzles.render import render
from bkpuzzles.rigidity import has_gentle_loop
from bkpuzzles.search import (
    CoeffRecord,
    TripleKey,
    enumerate_puzzles,
    factor_check,
)
from bkpuzzles.sweeps import run_all
from bkpuzzles.words import Word

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2


def _parse_key(args) -> TripleKey:
    words = [Word.parse(text) for text in (args.nw, args.ne, args.s)]
    d = max(w.d for w in words)
    words = [Word(w.letters, d) for w in words]
    return TripleKey(*words)


def _parse_vector(text: str) -> tuple:
    return tuple(part.strip() for part in text.split(","))


def _cached_count(args, key: TripleKey) -> int:
    if args.no_cache:
        return enumerate_puzzles(key, "count")
    cache = CoeffCache.open(default_cache_path(args.cache))
    return cache.count(key)


def _cmd_count(args) -> int:
    key = _parse_key(args)
    print(_cached_count(args, key))
    return EXIT_OK


def _cmd_list(args) -> int:
    key = _parse_key(args)
    count, puzzles = enumerate_puzzles(key, "list")
    if args.format == "json":
        print(json.dumps([p.to_json_obj() for p in puzzles], separators=(",", ":")))
    else:
        blocks = [render(p, args.format, arrows=args.arrows) for p in puzzles]
        print("\n\n".join(blocks))
    if not args.no_cache:
        cache = CoeffCache.open(default_cache_path(args.cache))
        cache.put(CoeffRecord(key=key, count=count))
    return EXIT_OK


def _cmd_factor(args) -> int:
    key = _parse_key(args)
    report = factor_check(key)
    for (i, j), value in sorted(report.pair_counts.items()):
        print(f"D_{i}{j}: {value}")
    for violation in report.violations:
        print(f"violation: {violation}")
    verdict = "OK" if report.ok else "MISMATCH"
    print(f"product={report.product} count={report.count} {verdict}")
    return EXIT_OK if report.ok else EXIT_VERIFY


def _cmd_oracle(args) -> int:
    key = _parse_key(args)
    cup = cup_constant(*key.words())
    bk = bk_constant(*key.words())
    count = _cached_count(args, key)
    agree = bk == count
    print(f"cup={cup} bk={bk} count={count} agree={'yes' if agree else 'no'}")
    return EXIT_OK if agree else EXIT_VERIFY


def _cmd_rigid(args) -> int:
    key = _parse_key(args)
    count, puzzles = enumerate_puzzles(key, "list")
    print(f"count={count}")
    for idx, p in enumerate(puzzles):
        loop, witness = has_gentle_loop(p)
        if loop:
            path = " -> ".join(str(node.edge) for node in witness)
            print(f"puzzle {idx}: gentle loop: {path}")
        else:
            print(f"puzzle {idx}: rigid (no gentle loop)")
    return EXIT_OK


def _cmd_facets(args) -> int:
    for ineq in facets(args.n):
        if args.format == "json":
            print(ineq.to_json())
        else:
            print(ineq.render())
    return EXIT_OK


def _cmd_face(args) -> int:
    try:
        p = Puzzle.from_json(Path(args.puzzle).read_text())
        validate(p)
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: cannot read puzzle: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        face = face_from_puzzle(p)
    except ValueError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    nw, ne, s = boundary(p)
    print(f"boundary=({nw},{ne},{s})")
    for ineq in face.equalities:
        print(ineq.render().replace("<=", "=="))
    return EXIT_OK


def _cmd_member(args) -> int:
    try:
        from fractions import Fraction

        lam, mu, nu = (
            [Fraction(x) for x in _parse_vector(v)] for v in (args.lam, args.mu, args.nu)
        )
        inside = member(lam, mu, nu, args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print("member" if inside else "not-member")
    return EXIT_OK


def _cmd_selftest(args) -> int:
    results = run_all(max_n=args.max_n, max_d=args.max_d, jobs=args.jobs)
    for result in results:
        print(result.line())
    if args.cache and not args.no_cache:
        cache = CoeffCache.open(default_cache_path(args.cache))
        problems = cache.verify()
        for problem in problems:
            print(f"cache: {problem}")
        if problems:
            return EXIT_VERIFY
    return EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bkpuzzles",
        description="Belkale-Kumar coefficients via puzzle enumeration",
    )
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--cache", help="path to the JSONL coefficient cache")
    shared.add_argument(
        "--no-cache", action="store_true", help="bypass the persistent cache"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kwargs):
        return sub.add_parser(name, parents=[shared], **kwargs)

    def triple(p):
        p.add_argument("nw")
        p.add_argument("ne")
        p.add_argument("s")

    p = add_parser("count", help="count puzzles with the given boundary")
    triple(p)
    p.set_defaults(func=_cmd_count)

    p = add_parser("list", help="list all puzzles with the given boundary")
    triple(p)
    p.add_argument("--format", choices=("json", "ascii", "svg"), default="json")
    p.add_argument("--arrows", action="store_true", help="draw region-edge arrows (svg)")
    p.set_defaults(func=_cmd_list)

    p = add_parser("factor", help="check the pairwise-deflation product formula")
    triple(p)
    p.set_defaults(func=_cmd_factor)

    p = add_parser("oracle", help="compare the count with the Schubert oracle")
    triple(p)
    p.set_defaults(func=_cmd_oracle)

    p = add_parser("rigid", help="rigidity report with gentle-loop witnesses")
    triple(p)
    p.set_defaults(func=_cmd_rigid)

    p = add_parser("facets", help="cone inequalities from rigid 2-letter puzzles")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_facets)

    p = add_parser("face", help="regular cone face from a loop-free puzzle file")
    p.add_argument("--puzzle", required=True, help="path to a puzzle JSON file")
    p.set_defaults(func=_cmd_face)

    p = add_parser("member", help="cone membership test")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lam", required=True, help="comma-separated rationals")
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.set_defaults(func=_cmd_member)

    p = add_parser("selftest", help="run the acceptance sweep")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--max-d", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
