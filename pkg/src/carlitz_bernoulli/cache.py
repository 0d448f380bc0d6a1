"""On-disk cache of computed values stored as canonical text.

Each entry is a small JSON file named by the SHA-256 of its key
``(p, e, modulus, kind, params)``.  A hit is only trusted if the stored
text parses back and re-renders to the identical string.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path
from typing import Callable

from .fq import FqField
from .textform import ParseError


def cache_key(field: FqField, kind: str, params: dict) -> dict:
    return {
        "p": field.p,
        "e": field.e,
        "modulus": list(field.modulus),
        "kind": kind,
        "params": params,
    }


def _digest(key: dict) -> str:
    blob = json.dumps(key, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


class DiskCache:
    def __init__(self, directory: str | os.PathLike):
        self.directory = Path(directory)
        self.hits = 0
        self.misses = 0
        self.rejected = 0

    def _path(self, key: dict) -> Path:
        return self.directory / f"{_digest(key)}.json"

    def get(self, key: dict, reparse: Callable[[str], str]) -> str | None:
        """Stored text for key, or None.  ``reparse`` maps text to its re-rendering."""
        path = self._path(key)
        try:
            entry = json.loads(path.read_text())
        except (OSError, ValueError):
            self.misses += 1
            return None
        text = entry.get("text")
        try:
            ok = entry.get("key") == key and isinstance(text, str) and reparse(text) == text
        except (ParseError, ValueError, ZeroDivisionError):
            ok = False
        if not ok:
            self.rejected += 1
            return None
        self.hits += 1
        return text

    def put(self, key: dict, text: str) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self._path(key)
        tmp = path.with_suffix(f".{os.getpid()}.tmp")
        tmp.write_text(json.dumps({"key": key, "text": text}, sort_keys=True))
        os.replace(tmp, path)

    def entries(self) -> list[dict]:
        """Keys of all readable entries, sorted by file name."""
        out = []
        if not self.directory.is_dir():
            return out
        for path in sorted(self.directory.glob("*.json")):
            try:
                out.append({"file": path.name, "key": json.loads(path.read_text())["key"]})
            except (OSError, ValueError, KeyError):
                out.append({"file": path.name, "key": None})
        return out

    def clear(self) -> int:
        removed = 0
        if self.directory.is_dir():
            for path in self.directory.glob("*.json"):
                path.unlink()
                removed += 1
        return removed

    def cached(self, key: dict, compute: Callable[[], str], reparse: Callable[[str], str]) -> str:
        text = self.get(key, reparse)
        if text is None:
            text = compute()
            self.put(key, text)
        return text
