"""Build seed codes and rank-modulation codecs from JSON-style dicts.

Accepted seed descriptors (extra keys are ignored, so descriptor output from
``BlockCodeDescriptor.to_json`` round-trips):

    {"family": "bch", "ext_degree": 8, "t": 5}            full-length BCH
    {"family": "bch", "n": 253, "t": 5}                    shortest BCH shortened to n
    {"family": "grs", "q": 16, "n": 15, "k": 9}            RS at alpha^0..alpha^(n-1)
    {"family": "grs", "q": 16, "k": 9, "points": [...]}    explicit evaluation points
    {"family": "product", "a": {...}, "b": {...}}
    {"family": "shortened", "base": {...}, "shorten_by": 2}
    {"family": "repetition", "q": 3, "n": 8}
    {"family": "linear", "q": 3, "generator": [[...], ...]}
    {"family": "full", "q": 2, "n": 13}
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from .codes import (
    GRSCode,
    LinearCode,
    bch_for_length,
    full_space,
    make_bch,
    product_code,
    reed_solomon,
    repetition_code,
    shorten,
)
from .codes.base import BlockCode
from .gf import gf_order, prime_power
from .gray import GrayCodec, GrayLayout
from .permpoly import PPCodec
from .quantize import QuantACodec, QuantBCodec

CONSTRUCTIONS = ("I", "II", "IIIA", "IIIB")


class ConfigError(ValueError):
    """The configuration does not describe a valid codec."""


def _need(spec: dict, *keys: str) -> list[Any]:
    missing = [k for k in keys if k not in spec]
    if missing:
        raise ConfigError(f"{spec.get('family') or spec.get('construction')!r} config is missing {missing}")
    return [spec[k] for k in keys]


def build_seed(spec: dict) -> BlockCode:
    family = spec.get("family")
    try:
        if family == "bch":
            t = spec.get("requested_t", spec.get("t"))
            if t is None:
                raise ConfigError("bch seed needs t")
            if "ext_degree" in spec:
                return make_bch(int(spec["ext_degree"]), int(t), int(spec.get("shorten_by", 0)))
            (n,) = _need(spec, "n")
            return bch_for_length(int(n), int(t))
        if family == "grs":
            q, k = _need(spec, "q", "k")
            if "points" in spec:
                return GRSCode(gf_order(int(q)), spec["points"], int(k), spec.get("multipliers"))
            (n,) = _need(spec, "n")
            return reed_solomon(int(q), int(n), int(k))
        if family == "product":
            a, b = _need(spec, "a", "b")
            return product_code(build_seed(a), build_seed(b), int(spec.get("max_iterations", 4)))
        if family == "shortened":
            base, count = _need(spec, "base", "shorten_by")
            return shorten(build_seed(base), int(count))
        if family == "repetition":
            q, n = _need(spec, "q", "n")
            return repetition_code(int(q), int(n))
        if family == "linear":
            q, g = _need(spec, "q", "generator")
            return LinearCode(gf_order(int(q)), g)
        if family == "full":
            q, n = _need(spec, "q", "n")
            return full_space(int(q), int(n))
    except ConfigError:
        raise
    except (ValueError, TypeError, KeyError) as exc:
        raise ConfigError(f"invalid {family} seed: {exc}") from exc
    raise ConfigError(f"unknown seed family {family!r}")


def build_codec(cfg: dict):
    construction = cfg.get("construction")
    if construction not in CONSTRUCTIONS:
        raise ConfigError(f"config must select a construction from {CONSTRUCTIONS}, got {construction!r}")
    try:
        if construction == "I":
            if "q" in cfg and "p" not in cfg:
                p, m = prime_power(int(cfg["q"]))
            else:
                p, m = (int(v) for v in _need(cfg, "p", "m"))
            (t,) = _need(cfg, "t")
            return PPCodec(p, m, int(t), cap=int(cfg.get("cap", 2**24)))
        if construction == "II":
            (n,) = _need(cfg, "n")
            n = int(n)
            seed = cfg.get("seed") or {"family": "bch", "n": GrayLayout(n).m, "t": _need(cfg, "t")[0]}
            return GrayCodec(n, build_seed(seed))
        if construction == "IIIA":
            (n,) = _need(cfg, "n")
            n = int(n)
            seed = cfg.get("seed") or {"family": "bch", "n": n - 1, "t": _need(cfg, "t")[0]}
            return QuantACodec(build_seed(seed))
        q, l, seed = _need(cfg, "q", "l", "seed")
        return QuantBCodec(int(q), int(l), build_seed(seed))
    except ConfigError:
        raise
    except (ValueError, TypeError) as exc:
        raise ConfigError(f"invalid construction {construction} config: {exc}") from exc


def load_config(path: Union[str, Path, None], overrides: dict | None = None) -> dict:
    cfg: dict = {}
    if path is not None:
        try:
            cfg = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        if not isinstance(cfg, dict):
            raise ConfigError("config must be a JSON object")
    for key, value in (overrides or {}).items():
        if value is not None:
            cfg[key] = value
    return cfg


def message_to_json(message):
    return message if isinstance(message, int) else list(message)


def message_from_json(codec, obj):
    """Parse one message for ``codec`` from a JSON value; raises ValueError on bad data."""
    if isinstance(obj, dict):
        obj = obj.get("message", obj.get("index"))
    if codec.construction == "I":
        if isinstance(obj, bool) or not isinstance(obj, int):
            raise ValueError(f"construction I messages are codebook indices, got {obj!r}")
        return obj
    if isinstance(obj, str):
        obj = [int(c) for c in obj.strip()]
    if not isinstance(obj, list) or not all(isinstance(v, int) for v in obj):
        raise ValueError(f"expected a list of symbols, got {obj!r}")
    return tuple(obj)
