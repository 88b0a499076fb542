"""Content-addressed on-disk cache of computed result documents."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

from . import __version__


def cache_key(command: str, inputs, order: int) -> str:
    blob = json.dumps({"version": __version__, "command": command, "input": inputs, "N": order},
                      sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


class ResultCache:
    """Stores JSON documents under ``<root>/<sha256>.json``; ``root=None`` disables it."""

    def __init__(self, root=None):
        self.root = Path(root) if root else None

    def _path(self, key: str) -> Path:
        return self.root / f"{key}.json"

    def get(self, key: str):
        if self.root is None:
            return None
        path = self._path(key)
        try:
            with open(path) as fh:
                return json.load(fh)
        except FileNotFoundError:
            return None
        except json.JSONDecodeError:
            # a torn or corrupted entry is treated as a miss and rewritten
            return None

    def put(self, key: str, document) -> None:
        if self.root is None:
            return
        self.root.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(document, fh, sort_keys=True)
        os.replace(tmp, self._path(key))

    def fetch(self, command: str, inputs, order: int, compute):
        """Cached document for the key, computing and storing it on a miss."""
        key = cache_key(command, inputs, order)
        doc = self.get(key)
        if doc is None:
            doc = compute()
            self.put(key, doc)
        return doc
