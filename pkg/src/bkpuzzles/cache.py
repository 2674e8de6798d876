"""Append-only JSONL cache of coefficient records.

One JSON object per line: the boundary triple, the count, where the value
came from, and the calibration pin version.  Entries from a different pin
version are ignored on read, so a recalibration can never serve stale
values.  Re-appending an identical record is harmless; a conflicting count
for the same key is reported by the integrity check rather than silently
overwritten.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path

from bkpuzzles import pins
from bkpuzzles.search import CoeffRecord, TripleKey, enumerate_puzzles
from bkpuzzles.words import Word

ENV_VAR = "BKPUZZLES_CACHE"


def default_cache_path(flag: str | None = None) -> Path:
    """Cache file location: flag, else $BKPUZZLES_CACHE, else ~/.bkpuzzles/."""
    if flag:
        return Path(flag)
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".bkpuzzles" / "coeffs.jsonl"


def _record_obj(record: CoeffRecord) -> dict:
    key = record.key
    return {
        "nw": str(key.nw),
        "ne": str(key.ne),
        "s": str(key.s),
        "d": key.d,
        "count": record.count,
        "provenance": record.provenance,
        "pin": pins.PIN_VERSION,
    }


def _cache_key(obj: dict) -> tuple:
    return (obj["nw"], obj["ne"], obj["s"], obj["d"])


@dataclass
class CoeffCache:
    """A JSONL-backed coefficient store."""

    path: Path
    entries: dict = field(default_factory=dict)

    @classmethod
    def open(cls, path: str | Path) -> "CoeffCache":
        cache = cls(path=Path(path))
        cache.reload()
        return cache

    def reload(self) -> None:
        self.entries = {}
        if not self.path.exists():
            return
        with self.path.open() as handle:
            for line in handle:
                line = line.strip()
                if not line:
                    continue
                try:
                    obj = json.loads(line)
                except json.JSONDecodeError:
                    # corrupt lines are ignored on read; verify() reports them
                    continue
                if obj.get("pin") != pins.PIN_VERSION:
                    continue
                self.entries[_cache_key(obj)] = obj

    def get(self, key: TripleKey) -> int | None:
        obj = self.entries.get((str(key.nw), str(key.ne), str(key.s), key.d))
        return None if obj is None else obj["count"]

    def put(self, record: CoeffRecord) -> None:
        obj = _record_obj(record)
        existing = self.entries.get(_cache_key(obj))
        if existing is not None and existing["count"] == obj["count"]:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as handle:
            handle.write(json.dumps(obj, separators=(",", ":")) + "\n")
        self.entries[_cache_key(obj)] = obj

    def count(self, key: TripleKey) -> int:
        """The coefficient for a key, recomputing and persisting on a miss."""
        cached = self.get(key)
        if cached is not None:
            return cached
        value = enumerate_puzzles(key, "count")
        self.put(CoeffRecord(key=key, count=value))
        return value

    def verify(self) -> list[str]:
        """Integrity re-check: recompute every entry; report mismatches and
        conflicting duplicate lines (the file is left untouched)."""
        problems: list[str] = []
        if not self.path.exists():
            return problems
        seen: dict = {}
        with self.path.open() as handle:
            for lineno, line in enumerate(handle, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    obj = json.loads(line)
                except json.JSONDecodeError:
                    problems.append(f"line {lineno}: not valid JSON")
                    continue
                if obj.get("pin") != pins.PIN_VERSION:
                    continue
                ck = _cache_key(obj)
                if ck in seen and seen[ck] != obj["count"]:
                    problems.append(
                        f"line {lineno}: conflicting counts for {ck[:3]}: "
                        f"{seen[ck]} vs {obj['count']}"
                    )
                seen[ck] = obj["count"]
                key = TripleKey(
                    Word.parse(obj["nw"], obj["d"]),
                    Word.parse(obj["ne"], obj["d"]),
                    Word.parse(obj["s"], obj["d"]),
                )
                actual = enumerate_puzzles(key, "count")
                if actual != obj["count"]:
                    problems.append(
                        f"line {lineno}: cached count {obj['count']} != "
                        f"recomputed {actual} for {key}"
                    )
        return problems
