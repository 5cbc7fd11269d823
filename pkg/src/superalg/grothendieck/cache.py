"""On-disk cache of Kac supports μ ↦ c_{μ,β}, keyed by β.

An entry is not a serialized Kac character ch K(μ). It stores, for one g₀-weight β, every μ whose
Kac module contains L₀(β) together with the multiplicity c_{μ,β}, which is the lookup
`irr_g0_character` needs. An entry computed with a bound λ holds only the μ that pass
`within_bound(μ, λ)`; an unbounded entry holds the whole support and is filtered on read.
"""

import os
import tempfile
import threading
from pathlib import Path

from loguru import logger
from pydantic import BaseModel, ConfigDict, StrictInt, ValidationError

from superalg.definitions import CACHE_FORMAT_VERSION
from superalg.errors import CacheFileNotFoundError, ParseError, SuperalgError
from superalg.grothendieck.characters import G0Character, within_bound
from superalg.weights import Weight


class CacheEntryJson(BaseModel):
    model_config = ConfigDict(extra="forbid")

    bound: str | None
    support: dict[str, StrictInt]


class CacheFileJson(BaseModel):
    """`{"version": 1, "entries": {"<β>": {"bound": "<λ>" | null, "support": {"<μ>": c}}}}`."""

    model_config = ConfigDict(extra="forbid")

    version: StrictInt
    entries: dict[str, CacheEntryJson]


class SupportCache:
    """Thread-safe map β ↦ (bound, support).

    An entry computed with bound λ only holds the μ within λ. A lookup succeeds when the stored
    bound is None (the support is then filtered by the requested bound) or equals the requested
    bound. Existing entries are never replaced.
    """

    def __init__(self):
        self._entries: dict[Weight, tuple[Weight | None, G0Character]] = {}
        self._lock = threading.Lock()
        self.dirty = False

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, alpha: object) -> bool:
        return alpha in self._entries

    @property
    def bounded_count(self) -> int:
        return sum(1 for bound, _ in self._entries.values() if bound is not None)

    def get(self, alpha: Weight, bound: Weight | None = None) -> G0Character | None:
        entry = self._entries.get(alpha)
        if entry is None:
            return None
        stored_bound, support = entry
        if stored_bound is None:
            if bound is None:
                return support
            return G0Character({mu: c for mu, c in support.items() if within_bound(mu, bound)})
        if stored_bound == bound:
            return support
        return None

    def put(self, alpha: Weight, bound: Weight | None, support: G0Character):
        with self._lock:
            if alpha not in self._entries:
                self._entries[alpha] = (bound, support)
                self.dirty = True

    def to_json(self) -> CacheFileJson:
        entries = {
            alpha.to_canonical_string(): CacheEntryJson(
                bound=bound.to_canonical_string() if bound is not None else None,
                support={mu.to_canonical_string(): c for mu, c in support.sorted_items()},
            )
            for alpha, (bound, support) in self._entries.items()
        }
        return CacheFileJson(version=CACHE_FORMAT_VERSION, entries=entries)

    @classmethod
    def from_json(cls, document: CacheFileJson) -> "SupportCache":
        if document.version != CACHE_FORMAT_VERSION:
            raise ParseError(
                f"Unsupported cache version {document.version}, expected {CACHE_FORMAT_VERSION}"
            )
        cache = cls()
        for key, entry in document.entries.items():
            try:
                alpha = Weight.parse(key)
                bound = Weight.parse(entry.bound) if entry.bound is not None else None
                support = G0Character({Weight.parse(k): c for k, c in entry.support.items()})
            except SuperalgError as e:
                logger.warning(f"Skipping cache entry '{key}': {e}")
                continue
            cache._entries[alpha] = (bound, support)
        return cache


def cache_load(path: Path) -> SupportCache:
    """Read a support cache file.

    Raises:
        CacheFileNotFoundError: If the file does not exist
        ParseError: If the file is not a valid cache document
    """
    path = Path(path)
    if not path.exists():
        raise CacheFileNotFoundError(path)
    try:
        document = CacheFileJson.model_validate_json(path.read_text(encoding="utf-8"))
    except ValidationError as e:
        raise ParseError(f"Malformed support cache {path}: {e}") from e
    cache = SupportCache.from_json(document)
    logger.info(f"Loaded {len(cache)} cache entries from {path}")
    return cache


def cache_store(cache: SupportCache, path: Path):
    """Write the cache atomically and clear its dirty flag."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = cache.to_json().model_dump_json(indent=1)
    fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            f.write(payload)
        Path(tmp_name).replace(path)
    except BaseException:
        Path(tmp_name).unlink(missing_ok=True)
        raise
    cache.dirty = False
    logger.success(f"Stored {len(cache)} cache entries in {path}")
