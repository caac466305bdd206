"""utils.py — Shared utilities: errors, config, JSON sanitize, bitmask helpers"""
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np


# ── Errors ────────────────────────────────────
class DicritixError(ValueError):
    """Root of every error the library raises on bad input."""


class VertexRangeError(DicritixError):
    pass


class ParameterError(DicritixError):
    pass


class FormatError(DicritixError):
    pass


class ColouringError(DicritixError):
    pass


class HypothesisViolation(DicritixError):
    """A caller-asserted hypothesis turned out false (used as a theorem probe)."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class BudgetExceeded(DicritixError):
    pass


# ── Config ────────────────────────────────────
# Unlike the int-mask layout, contracts never assume n <= 64; this is only the
# ceiling enforced by RunConfig.
LIBRARY_MAX_N = 64

DATA_DIR    = Path(__file__).resolve().parent.parent / "data"
CONFIG_FILE = DATA_DIR / "config.json"

DEFAULT_CONFIG = {
    "max_n":            16,
    "canon_max_n":      9,
    "exhaustive_max_n": 6,     # n=7 only with pruning filters
    "worker_count":     1,
    "seed":             20240101,
    "budget_seconds":   1800,
    "output":           "text",   # text | json
    "cache_census":     False,
    "census_cache_dir": str(DATA_DIR / "census"),
}

_ENV_OVERRIDES = {
    "DICRITIX_WORKERS":  ("worker_count", int),
    "DICRITIX_SEED":     ("seed", int),
    "DICRITIX_BUDGET_S": ("budget_seconds", int),
}


def load_config(path=None) -> dict:
    """Merge data/config.json (or DICRITIX_CONFIG) over DEFAULT_CONFIG, then env overrides."""
    path = Path(path or os.getenv("DICRITIX_CONFIG") or CONFIG_FILE)
    merged = DEFAULT_CONFIG.copy()
    if path.exists():
        try:
            text = path.read_text().strip()
            if text:
                merged.update(json.loads(text))
        except (json.JSONDecodeError, OSError) as e:
            log("CONFIG", f"{path} unreadable ({e}), using defaults")
    for env, (key, cast) in _ENV_OVERRIDES.items():
        raw = os.getenv(env)
        if raw:
            try:
                merged[key] = cast(raw)
            except ValueError:
                raise ParameterError(f"{env}={raw!r} is not an integer")
    return merged


@dataclass(frozen=True)
class RunConfig:
    max_n:            int = 16
    canon_max_n:      int = 9
    exhaustive_max_n: int = 6
    worker_count:     int = 1
    seed:             int = 20240101
    budget_seconds:   int = 1800
    output:           str = "text"
    cache_census:     bool = False
    census_cache_dir: str = str(DATA_DIR / "census")

    def __post_init__(self):
        if self.worker_count < 1:
            raise ParameterError("worker_count must be >= 1")
        if not 1 <= self.max_n <= LIBRARY_MAX_N:
            raise ParameterError(f"max_n must lie in [1, {LIBRARY_MAX_N}]")
        if self.output not in ("text", "json"):
            raise ParameterError("output must be 'text' or 'json'")
        if not 0 <= self.seed < 2 ** 64:
            raise ParameterError("seed must be a 64-bit unsigned integer")

    @classmethod
    def from_mapping(cls, cfg: dict, **overrides) -> "RunConfig":
        fields = {k: cfg[k] for k in cls.__dataclass_fields__ if k in cfg}
        fields.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**fields)


# ── Logging ───────────────────────────────────
_quiet = False


def set_quiet(flag: bool):
    global _quiet
    _quiet = bool(flag)


def log(tag: str, msg: str):
    """Tagged progress line on stderr; stdout is reserved for digraph streams and reports."""
    if not _quiet:
        print(f"[{tag}] {msg}", file=sys.stderr)


# ── JSON ──────────────────────────────────────
def sanitize(obj):
    """Recursively convert numpy/Fraction/set values to JSON-native types."""
    if isinstance(obj, dict):   return {str(k): sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)): return [sanitize(i) for i in obj]
    if isinstance(obj, (set, frozenset)): return sorted(sanitize(i) for i in obj)
    if isinstance(obj, (bool, np.bool_)): return bool(obj)
    if isinstance(obj, np.integer):       return int(obj)
    if isinstance(obj, Fraction):
        return str(obj.numerator) if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, np.floating):
        return None if (np.isnan(obj) or np.isinf(obj)) else float(obj)
    if isinstance(obj, float):
        return None if (obj != obj or obj in (float('inf'), float('-inf'))) else obj
    if isinstance(obj, np.ndarray): return [sanitize(x) for x in obj.tolist()]
    return obj


def dumps(obj, **kwargs) -> str:
    return json.dumps(sanitize(obj), ensure_ascii=False, allow_nan=False, **kwargs)


# ── Bitmask vertex sets ───────────────────────
def vset(vertices) -> int:
    """Bitmask for an iterable of vertex ids."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list:
    """Sorted vertex ids of a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1
