"""scanner/census_engine.py — Isomorph-free digraph census, k-dicritical enumeration, d_k(n) tables.

Generation is by vertex augmentation: every digraph arises from a parent with one vertex
fewer by adding a vertex of maximum total degree. Degree filters are relaxed per level
(deleting a vertex costs a neighbour at most one in- and one out-arc), so each level keeps
exactly the parents that can still grow into a filtered digraph. Duplicates are removed by
canonical form, and every level is sorted by canonical form so the output does not depend
on the worker count. Shards (slices of the parent level) run in a process pool.
"""
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from pathlib import Path

import pandas as pd

from core.canon import canonical_form
from core.criticality import is_k_dicritical
from core.digraph import Digraph
from core.families import order_construction
from core.formats import from_digraph6, to_digraph6
from core.structure import arc_connectivity, is_connected
from core.utils import (BudgetExceeded, DicritixError, ParameterError, RunConfig,
                        log, members, popcount)


@dataclass(frozen=True)
class CensusFilters:
    min_degree: int = 0      # d(v) = d+(v) + d−(v)
    min_dmin:   int = 0      # min(d+(v), d−(v))
    connected:  bool = False

    @property
    def is_trivial(self) -> bool:
        return self.min_degree <= 0 and self.min_dmin <= 0 and not self.connected

    def at_depth(self, depth: int) -> "CensusFilters":
        """Filters a parent `depth` vertex-deletions below the target must still pass."""
        return CensusFilters(max(0, self.min_degree - 2 * depth),
                             max(0, self.min_dmin - depth),
                             self.connected and depth == 0)

    def accepts(self, G: Digraph) -> bool:
        for v in range(G.n):
            dp, dm = popcount(G.out[v]), popcount(G.inn[v])
            if dp + dm < self.min_degree or min(dp, dm) < self.min_dmin:
                return False
        return not self.connected or is_connected(G)

    def tag(self) -> str:
        return f"d{self.min_degree}_m{self.min_dmin}_c{int(self.connected)}"


def dicritical_filters(k: int) -> CensusFilters:
    """Necessary conditions for k-dicritical: d >= 2(k−1), d_min >= k−1, connected."""
    return CensusFilters(2 * (k - 1), k - 1, True)


# ── augmentation ──────────────────────────────
def _supersets(base: int, free: int):
    """Every mask base | s for s ⊆ free."""
    sub = free
    while True:
        yield base | sub
        if sub == 0:
            return
        sub = (sub - 1) & free


def _children(P: Digraph, filt: CensusFilters):
    """Digraphs P + v (v = new vertex of maximum degree) passing the degree part of filt."""
    p = P.n
    outd = [popcount(P.out[w]) for w in range(p)]
    ind = [popcount(P.inn[w]) for w in range(p)]
    need_in_bump = need_out_bump = 0
    for w in range(p):
        lack_in = filt.min_dmin - ind[w]
        lack_out = filt.min_dmin - outd[w]
        if lack_in > 1 or lack_out > 1 or filt.min_degree - outd[w] - ind[w] > 2:
            return
        if lack_in == 1:
            need_in_bump |= 1 << w
        if lack_out == 1:
            need_out_bump |= 1 << w
    everyone = (1 << p) - 1
    top = max((outd[w] + ind[w] for w in range(p)), default=0)
    for omask in _supersets(need_in_bump, everyone & ~need_in_bump):
        od = popcount(omask)
        if od < filt.min_dmin:
            continue
        for imask in _supersets(need_out_bump, everyone & ~need_out_bump):
            idg = popcount(imask)
            deg = od + idg
            if idg < filt.min_dmin or deg < filt.min_degree or deg < top:
                continue
            ok = True
            for w in range(p):
                dw = outd[w] + ind[w] + (omask >> w & 1) + (imask >> w & 1)
                if dw < filt.min_degree or dw > deg:
                    ok = False
                    break
            if not ok:
                continue
            out = list(P.out)
            for w in members(imask):
                out[w] |= 1 << p
            out.append(omask)
            yield Digraph.from_out_masks(out)


def extend_shard(parents: list, filt: CensusFilters, canon_max_n: int) -> dict:
    """Worker: canonical hex -> digraph6 for every child of the given parents (digraph6)."""
    found = {}
    for code in parents:
        for H in _children(from_digraph6(code), filt):
            if filt.connected and not is_connected(H):
                continue
            form = canonical_form(H, canon_max_n).hex()
            if form not in found:
                found[form] = to_digraph6(H)
    return found


class _Clock:
    def __init__(self, budget_seconds: int):
        self.start = time.monotonic()
        self.budget = budget_seconds

    def check(self, what: str):
        if time.monotonic() - self.start > self.budget:
            raise BudgetExceeded(f"{what}: exceeded the {self.budget}s budget")

    @property
    def elapsed_ms(self) -> int:
        return int((time.monotonic() - self.start) * 1000)


def _grow_level(parents: list, filt: CensusFilters, cfg: RunConfig, clock: _Clock) -> list:
    codes = [to_digraph6(P) for P in parents]
    merged = {}
    if cfg.worker_count <= 1 or len(codes) < 2 * cfg.worker_count:
        for i in range(0, len(codes), 64):
            for form, code in extend_shard(codes[i:i + 64], filt, cfg.canon_max_n).items():
                merged.setdefault(form, code)
            clock.check("census")
    else:
        shards = [codes[i::cfg.worker_count * 4] for i in range(cfg.worker_count * 4)]
        with ProcessPoolExecutor(max_workers=cfg.worker_count) as ex:
            futures = {ex.submit(extend_shard, s, filt, cfg.canon_max_n): i
                       for i, s in enumerate(shards) if s}
            for fut in as_completed(futures):
                try:
                    part = fut.result()
                except Exception as e:
                    raise DicritixError(f"census shard {futures[fut]} failed: {e}") from e
                for form, code in part.items():
                    merged.setdefault(form, code)
                clock.check("census")
    return [from_digraph6(merged[f]) for f in sorted(merged)]


# ── cache ─────────────────────────────────────
def _cache_path(cfg: RunConfig, name: str) -> Path:
    return Path(cfg.census_cache_dir) / f"{name}.d6"


def _load_cached(cfg: RunConfig, name: str):
    if not cfg.cache_census:
        return None
    path = _cache_path(cfg, name)
    try:
        if path.exists():
            text = path.read_text()
            found = [from_digraph6(l) for l in text.splitlines() if l.strip()]
            log("CACHE", f"loaded {len(found)} digraphs from {path}")
            return found
    except (OSError, DicritixError) as e:
        log("CACHE", f"{path} unreadable ({e}), recomputing")
    return None


def _persist(cfg: RunConfig, name: str, graphs: list):
    if not cfg.cache_census:
        return
    path = _cache_path(cfg, name)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text("".join(to_digraph6(G) + "\n" for G in graphs))
        log("CACHE", f"saved {len(graphs)} digraphs to {path}")
    except OSError as e:
        log("CACHE", f"could not write {path}: {e}")


# ── public operations ─────────────────────────
def enumerate_digraphs(n: int, filters: CensusFilters = None, cfg: RunConfig = None) -> list:
    """One digraph per isomorphism class on n vertices passing `filters`, sorted by canonical form."""
    cfg = cfg or RunConfig()
    filters = filters or CensusFilters()
    if n < 0:
        raise ParameterError("n must be >= 0")
    if n > cfg.canon_max_n:
        raise ParameterError(f"n={n} exceeds canon_max_n={cfg.canon_max_n}")
    if n > cfg.exhaustive_max_n + 1 or (n > cfg.exhaustive_max_n and filters.min_degree <= 0):
        raise ParameterError(f"n={n} needs a degree-pruning filter beyond "
                             f"exhaustive_max_n={cfg.exhaustive_max_n}")
    name = f"census_n{n}_{filters.tag()}"
    cached = _load_cached(cfg, name)
    if cached is not None:
        return cached
    clock = _Clock(cfg.budget_seconds)
    if n == 0:
        level = [Digraph.empty(0)] if filters.accepts(Digraph.empty(0)) else []
    else:
        level = [Digraph.empty(1)]
        for m in range(2, n + 1):
            level = _grow_level(level, filters.at_depth(n - m), cfg, clock)
            log("CENSUS", f"n={n} level {m}: {len(level)} classes ({clock.elapsed_ms} ms)")
        level = [G for G in level if filters.accepts(G)]
    _persist(cfg, name, level)
    return level


def enumerate_k_dicritical(k: int, n: int, cfg: RunConfig = None) -> list:
    """All k-dicritical digraphs of order n up to isomorphism."""
    cfg = cfg or RunConfig()
    if k < 1:
        raise ParameterError("k must be >= 1")
    if k == 1:
        return [Digraph.empty(1)] if n == 1 else []
    if n < k:
        return []
    name = f"crit_k{k}_n{n}"
    cached = _load_cached(cfg, name)
    if cached is not None:
        return cached
    out = []
    for G in enumerate_digraphs(n, dicritical_filters(k), cfg):
        if arc_connectivity(G) < k - 1:
            continue
        if is_k_dicritical(G, k).is_dicritical:
            out.append(G)
    log("CENSUS", f"{len(out)} {k}-dicritical digraphs on {n} vertices")
    _persist(cfg, name, out)
    return out


# ── d_k(n) ────────────────────────────────────
@dataclass
class MinArcsTable:
    k:       int
    entries: dict = field(default_factory=dict)   # n -> (arcs, "exhaustive" | "upper-bound-only")

    def value(self, n: int) -> int:
        return self.entries[n][0]

    def exhaustive(self) -> dict:
        return {n: a for n, (a, p) in self.entries.items() if p == "exhaustive"}

    def to_frame(self) -> pd.DataFrame:
        rows = [{"k": self.k, "n": n, "d_k(n)": a, "provenance": p}
                for n, (a, p) in sorted(self.entries.items())]
        return pd.DataFrame(rows, columns=["k", "n", "d_k(n)", "provenance"])

    def to_dict(self) -> dict:
        return {"k": self.k,
                "entries": [{"n": n, "arcs": a, "provenance": p}
                            for n, (a, p) in sorted(self.entries.items())]}


def min_arcs_table(k: int, n_max: int, cfg: RunConfig = None) -> MinArcsTable:
    """Exact d_k(n) up to exhaustive_max_n; beyond it, family and superadditivity upper bounds."""
    cfg = cfg or RunConfig()
    if k < 2:
        raise ParameterError("d_k(n) tables need k >= 2")
    table = MinArcsTable(k)
    limit = min(cfg.exhaustive_max_n, cfg.canon_max_n)
    for n in range(k, n_max + 1):
        if n <= limit:
            found = enumerate_k_dicritical(k, n, cfg)
            if found:
                table.entries[n] = (min(G.arc_count for G in found), "exhaustive")
                continue
        best = order_construction(k, n).arc_count
        # superadditivity through Hajós joins of known entries
        for a in range(k, n):
            b = n + 1 - a
            if a in table.entries and b in table.entries:
                best = min(best, table.value(a) + table.value(b) - 1)
        table.entries[n] = (best, "upper-bound-only")
    return table
