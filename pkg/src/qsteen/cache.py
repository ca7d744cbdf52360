"""Content-addressed file cache for exported reports."""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
import warnings
from typing import Callable

from .errors import CacheIOWarning

log = logging.getLogger(__name__)

ENV_VAR = "QSTEEN_CACHE"


def cache_key(fields: dict) -> str:
    blob = json.dumps(fields, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def resolve_cache_path(configured: str | None) -> str | None:
    return os.environ.get(ENV_VAR) or configured


def cache_get_or_compute(key: str, compute: Callable[[], bytes], cache_path: str | None) -> bytes:
    """Return cached bytes for ``key`` or compute, store and return them.

    Writes go through a temporary file and an atomic rename, so concurrent
    writers of the same key leave one complete entry behind.  Any I/O failure
    degrades to computing without the cache.
    """
    if not cache_path:
        return compute()
    target = os.path.join(cache_path, key + ".out")
    try:
        with open(target, "rb") as fh:
            log.debug("cache hit %s", key)
            return fh.read()
    except FileNotFoundError:
        pass
    except OSError as exc:
        warnings.warn(f"cache read failed ({exc}); computing directly", CacheIOWarning)
        return compute()
    data = compute()
    try:
        os.makedirs(cache_path, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=cache_path, prefix=".tmp-")
        try:
            with os.fdopen(fd, "wb") as fh:
                fh.write(data)
            os.replace(tmp, target)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
    except OSError as exc:
        warnings.warn(f"cache write failed ({exc}); result not stored", CacheIOWarning)
    return data
