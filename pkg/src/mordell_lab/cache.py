"""JSON-lines result cache with replay manifests.

Every CLI run is described by a RunManifest (subcommand, canonicalized
parameters, tool version, timestamp); cached values are keyed by
subcommand + parameters only, so a hit must be bit-identical to a fresh
computation.  The `cache-audit` subcommand replays every record and
reports any mismatch.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path

__version__ = "0.1.0"

ENV_CACHE_PATH = "MORDELL_LAB_CACHE"
_BIG = 2**53
_DIGITS = re.compile(r"^-?[0-9]+$")


def canonical_params(params: dict) -> str:
    return json.dumps(params, sort_keys=True, separators=(",", ":"))


def cache_key(subcommand: str, params: dict) -> str:
    return f"{subcommand}|{canonical_params(params)}"


@dataclass(frozen=True)
class RunManifest:
    subcommand: str
    params: dict
    version: str = __version__
    timestamp: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat())
    seed: int | None = None


@dataclass(frozen=True)
class CacheRecord:
    key: str
    value: dict
    manifest: dict


def encode_big_ints(obj):
    """Integers beyond 2^53 become decimal strings so JSON consumers
    cannot silently lose precision."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) >= _BIG else obj
    if isinstance(obj, (list, tuple)):
        return [encode_big_ints(v) for v in obj]
    if isinstance(obj, dict):
        return {k: encode_big_ints(v) for k, v in obj.items()}
    return obj


def decode_big_ints(obj):
    """Inverse of encode_big_ints: digit strings are big integers by the
    output-schema convention (no other field holds a bare digit string)."""
    if isinstance(obj, str) and _DIGITS.match(obj):
        return int(obj)
    if isinstance(obj, list):
        return [decode_big_ints(v) for v in obj]
    if isinstance(obj, dict):
        return {k: decode_big_ints(v) for k, v in obj.items()}
    return obj


def emit(result: dict) -> str:
    return json.dumps(encode_big_ints(result), sort_keys=True)


def parse(text: str) -> dict:
    return decode_big_ints(json.loads(text))


class ResultCache:
    """Append-only JSON-lines store; one CacheRecord per line."""

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)

    def records(self) -> list[CacheRecord]:
        if not self.path.exists():
            return []
        out = []
        with open(self.path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    raw = json.loads(line)
                    out.append(CacheRecord(raw["key"], raw["value"], raw["manifest"]))
        return out

    def get(self, key: str) -> dict | None:
        for rec in self.records():
            if rec.key == key:
                return rec.value
        return None

    def put(self, record: CacheRecord):
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(asdict(record), sort_keys=True) + "\n")


def resolve_cache_path(flag_value: str | None) -> Path | None:
    """Flag beats environment; no default path means caching is off."""
    if flag_value:
        return Path(flag_value)
    env = os.environ.get(ENV_CACHE_PATH)
    return Path(env) if env else None
