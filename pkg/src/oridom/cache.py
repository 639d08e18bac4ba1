"""DOM result cache keyed by the labeled graph (not its isomorphism class).

Relabeling an isomorphic graph therefore misses on purpose. The cache file
is line-oriented ``hash<TAB>value<TAB>solver-version``; corrupt lines are
skipped with a warning, never fatal.
"""

from __future__ import annotations

import hashlib
import os
import warnings
from pathlib import Path

from .domsearch import SOLVER_VERSION
from .graphs import UndirectedGraph

CACHE_ENV = "ORIDOM_CACHE_DIR"
_FILENAME = "dom-cache.tsv"


def default_cache_dir() -> Path:
    override = os.environ.get(CACHE_ENV)
    if override:
        return Path(override)
    return Path.home() / ".cache" / "oridom"


def graph_key(G: UndirectedGraph) -> str:
    payload = f"{G.n}:" + ";".join(f"{u},{v}" for u, v in G.edges)
    return hashlib.sha256(payload.encode("ascii")).hexdigest()


class DomCache:
    def __init__(self, directory: str | Path | None = None):
        self.directory = Path(directory) if directory else default_cache_dir()
        self.path = self.directory / _FILENAME

    def lookup(self, G: UndirectedGraph) -> int | None:
        if not self.path.exists():
            return None
        key = graph_key(G)
        hit = None
        with open(self.path, encoding="utf-8") as handle:
            for lineno, line in enumerate(handle, start=1):
                line = line.rstrip("\n")
                if not line:
                    continue
                fields = line.split("\t")
                if len(fields) != 3 or not fields[1].lstrip("-").isdigit():
                    warnings.warn(f"skipping corrupt cache line {lineno}: {line!r}", stacklevel=2)
                    continue
                if fields[0] == key and fields[2] == SOLVER_VERSION:
                    hit = int(fields[1])
        return hit

    def store(self, G: UndirectedGraph, value: int) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        with open(self.path, "a", encoding="utf-8") as handle:
            handle.write(f"{graph_key(G)}\t{value}\t{SOLVER_VERSION}\n")
