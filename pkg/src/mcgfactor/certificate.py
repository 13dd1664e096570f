"""Certificate files: deterministic JSON for a factorization."""
from __future__ import annotations

import hashlib
import json

from . import __version__
from .catalog import CatalogError, build_catalog
from .families import Factorization
from .mapping import MappingClassWord

SCHEMA_VERSION = 1


class CertificateError(ValueError):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def content(f: Factorization) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "surface": {"g": f.surface[0], "n": f.surface[1]},
        "family": f.family,
        "m": f.m,
        "g": f.g,
        "k": f.k,
        "target": f.target.to_json(),
        "twists": f.twists.to_json(),
        "claimed_length": f.claimed_length,
        "all_nonseparating": f.all_nonseparating,
        "blocks": [{"label": lbl, "start": s, "length": n} for lbl, s, n in f.blocks],
    }


def digest(body: dict) -> str:
    return hashlib.sha256(_dumps(body).encode()).hexdigest()


def serialize(f: Factorization) -> str:
    body = content(f)
    body["metadata"] = {"generator": f"mcgfactor {__version__}", "content_sha256": digest(body)}
    return _dumps(body)


def _int(data, key, allow_none=False):
    v = data.get(key)
    if v is None and allow_none:
        return None
    if not isinstance(v, int) or isinstance(v, bool):
        raise CertificateError(f"{key!r} must be an integer")
    return v


def parse(text: str) -> tuple:
    """``(factorization, digest_ok)``; malformed input raises :class:`CertificateError`.

    A digest mismatch is reported, not fatal: the twists are checked on their own merits.
    """
    try:
        data = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise CertificateError(f"not JSON: {exc}") from None
    if not isinstance(data, dict):
        raise CertificateError("certificate must be a JSON object")
    if data.get("schema_version") != SCHEMA_VERSION:
        raise CertificateError(f"unsupported schema_version {data.get('schema_version')!r}")
    surf = data.get("surface")
    if not isinstance(surf, dict):
        raise CertificateError("missing surface")
    g, n = _int(surf, "g"), _int(surf, "n")
    try:
        build_catalog(g, n)
    except CatalogError as exc:
        raise CertificateError(str(exc)) from None
    try:
        target = MappingClassWord.from_json(data.get("target"))
        twists = MappingClassWord.from_json(data.get("twists"))
    except (ValueError, TypeError) as exc:
        raise CertificateError(f"bad twist list: {exc}") from None
    family = data.get("family")
    if not isinstance(family, str):
        raise CertificateError("'family' must be a string")
    if not isinstance(data.get("all_nonseparating"), bool):
        raise CertificateError("'all_nonseparating' must be a boolean")
    blocks = data.get("blocks", [])
    try:
        blocks = tuple((b["label"], int(b["start"]), int(b["length"])) for b in blocks)
    except (TypeError, KeyError, ValueError):
        raise CertificateError("bad blocks") from None
    f = Factorization((g, n), target, twists, family, _int(data, "m"), _int(data, "claimed_length"),
                      data["all_nonseparating"], g=_int(data, "g", True), k=_int(data, "k", True),
                      blocks=blocks)
    meta = data.get("metadata") or {}
    body = {k: v for k, v in data.items() if k != "metadata"}
    return f, meta.get("content_sha256") == digest(body)
