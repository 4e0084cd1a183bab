"""Content-addressed JSON result cache.

Layout: <cache-dir>/<stage>/<sha256-of-key>.json, where the key combines the
stage name, the engine version and the stage inputs.  Corrupt entries are
ignored with a warning and recomputed.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
from pathlib import Path

from . import ENGINE_VERSION

ENV_VAR = "NHSF_CACHE_DIR"


def _stable_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


class ResultCache:
    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def key_hash(self, stage: str, key) -> str:
        blob = _stable_dumps({"stage": stage, "engine": ENGINE_VERSION, "key": key})
        return hashlib.sha256(blob.encode()).hexdigest()

    def path(self, stage: str, key) -> Path:
        d = self.root / stage
        d.mkdir(parents=True, exist_ok=True)
        return d / f"{self.key_hash(stage, key)}.json"

    def get(self, stage: str, key):
        p = self.path(stage, key)
        if not p.exists():
            return None
        try:
            return json.loads(p.read_text())
        except (json.JSONDecodeError, OSError) as exc:
            print(f"warning: ignoring corrupt cache entry {p}: {exc}", file=sys.stderr)
            return None

    def put(self, stage: str, key, value) -> None:
        self.path(stage, key).write_text(_stable_dumps(value))


def default_cache(cli_dir: str | None = None) -> ResultCache | None:
    """Cache from --cache-dir, else NHSF_CACHE_DIR, else disabled."""
    d = cli_dir or os.environ.get(ENV_VAR)
    return ResultCache(d) if d else None
