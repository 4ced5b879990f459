"""Opt-in on-disk cache for tensor powers.

Plain text: a magic first line, then one JSON record per entry, keyed by
(partition, exponent, cap). A file whose header does not match the current
format version is treated as empty and rewritten on save.
"""

from __future__ import annotations

import json
import os

MAGIC = "LRPOW1"

Key = tuple[tuple[int, ...], int, int | None]


class PowerCache:
    def __init__(self, path: str):
        self.path = path
        self.valid_header = True
        self._entries: dict[Key, dict[tuple[int, ...], int]] = {}
        self._dirty = False
        self._load()

    def _load(self) -> None:
        if not os.path.exists(self.path):
            return
        try:
            with open(self.path, "r", encoding="utf-8") as fh:
                lines = fh.read().splitlines()
        except OSError:
            self.valid_header = False
            return
        if not lines or lines[0] != MAGIC:
            self.valid_header = False
            return
        for line in lines[1:]:
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
                key = (tuple(rec["partition"]), int(rec["n"]), rec["cap"])
                terms = {tuple(t[0]): int(t[1]) for t in rec["terms"]}
            except (ValueError, KeyError, TypeError):
                self.valid_header = False
                self._entries.clear()
                return
            self._entries[key] = terms

    def get(self, parts: tuple[int, ...], n: int, cap: int | None):
        return self._entries.get((parts, n, cap))

    def put(self, parts: tuple[int, ...], n: int, cap: int | None, terms) -> None:
        key = (parts, n, cap)
        if key not in self._entries:
            self._entries[key] = dict(terms)
            self._dirty = True

    def __len__(self) -> int:
        return len(self._entries)

    def save(self) -> None:
        if not self._dirty and self.valid_header and os.path.exists(self.path):
            return
        with open(self.path, "w", encoding="utf-8") as fh:
            fh.write(MAGIC + "\n")
            for (parts, n, cap) in sorted(
                self._entries, key=lambda k: (k[0], k[1], -1 if k[2] is None else k[2])
            ):
                terms = self._entries[(parts, n, cap)]
                rec = {
                    "partition": list(parts),
                    "n": n,
                    "cap": cap,
                    "terms": [[list(t), str(m)] for t, m in sorted(terms.items(), reverse=True)],
                }
                fh.write(json.dumps(rec) + "\n")
        self._dirty = False
        self.valid_header = True
