"""Canonical JSON serialization and a content-addressed artifact cache.

All artifacts are written as canonical JSON — sorted keys, fixed separators,
trailing newline — so identical inputs produce byte-identical files.  The
cache keys artifacts by the SHA-256 of their canonical build description,
never by filename, so stale entries cannot be confused with current ones.
The cache directory comes from the CURVELAB_CACHE environment variable; with
no directory set, caching is disabled and everything is recomputed.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path
from typing import Callable

CACHE_ENV = "CURVELAB_CACHE"


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def content_hash(obj) -> str:
    return hashlib.sha256(canonical_json(obj).encode()).hexdigest()


def cache_dir() -> Path | None:
    path = os.environ.get(CACHE_ENV)
    return Path(path) if path else None


def cached_text(key_obj, produce: Callable[[], str]) -> str:
    """The produced text, via the cache when one is configured.

    ``key_obj`` is any JSON-able description of the computation; the cache
    file is named by its content hash.
    """
    directory = cache_dir()
    if directory is None:
        return produce()
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{content_hash(key_obj)}.json"
    if path.exists():
        return path.read_text()
    text = produce()
    tmp = path.with_suffix(".tmp")
    tmp.write_text(text)
    tmp.replace(path)
    return text
