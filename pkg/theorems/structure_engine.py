"""theorems/structure_engine.py — Brooks-type bound, small dicritical digraphs and the structural
properties every k-dicritical digraph must have."""
from core.canon import canonical_form
from core.colouring import chi
from core.criticality import sanity_lemmas
from core.digraph import Digraph, dirac_join, max_dmax
from core.families import complete_symmetric, directed_cycle
from core.structure import (arc_connectivity, component_count, is_connected, is_gallai_forest,
                            low_cut_colour_profile, low_cut_partitions)
from core.utils import members, popcount
from scanner.census_engine import CensusFilters, enumerate_digraphs, enumerate_k_dicritical
from theorems.instances import dicritical_instances


def _ks(params) -> list:
    k = params.get("k")
    if k is None:
        return [2, 3, 4]
    return [k] if isinstance(k, int) else list(k)


# ── Brooks ────────────────────────────────────
def is_directed_cycle(G: Digraph) -> bool:
    return (G.n >= 2 and G.arc_count == G.n and is_connected(G)
            and all(popcount(G.out[v]) == 1 == popcount(G.inn[v]) for v in range(G.n)))


def is_symmetric_odd_cycle(G: Digraph) -> bool:
    return (G.n >= 3 and G.n % 2 == 1 and G.is_symmetric() and is_connected(G)
            and all(popcount(G.out[v]) == 2 for v in range(G.n)))


def brooks_extremal(G: Digraph) -> bool:
    """Connected G attaining χ⃗ = Δ_max + 1, under the reading where ↔K_2 is a symmetric
    cycle of length 2 and ↔K_1 is trivial."""
    if G.n == 1:
        return True
    if G.n == 2 and G.is_complete():
        return True
    if is_directed_cycle(G) or is_symmetric_odd_cycle(G):
        return True
    return G.n >= 4 and G.is_complete()


def verify_brooks(probe, params, cfg):
    for n in range(1, params.get("nmax", 5) + 1):
        for G in enumerate_digraphs(n, CensusFilters(connected=True), cfg):
            c, bound = chi(G), max_dmax(G) + 1
            probe.check(G, c <= bound and (c == bound) == brooks_extremal(G),
                        {"chi": c, "dmax_plus_1": bound, "extremal": brooks_extremal(G)})
            probe.tick()
    probe.note("↔K_2 is read as a symmetric cycle of length 2 and ↔K_1 as trivially extremal")


# ── unique small dicritical digraphs ──────────
def verify_unique_small(probe, params, cfg):
    """(k, k) -> {↔K_k}; (k, k+1) -> {↔K_2(↔K_{k−2}, C⃗_3)}; (2, n) -> {C⃗_n}."""
    kmax = params.get("kmax", 3)
    nmax = params.get("nmax", 6)
    expected = []
    for k in range(2, kmax + 1):
        expected.append((k, k, complete_symmetric(k)))
        if k + 1 <= nmax:
            expected.append((k, k + 1, dirac_join(complete_symmetric(k - 2), directed_cycle(3))))
    expected += [(2, n, directed_cycle(n)) for n in range(4, nmax + 1)]
    for k, n, want in expected:
        found = enumerate_k_dicritical(k, n, cfg)
        forms = sorted(canonical_form(G, cfg.canon_max_n).hex() for G in found)
        target = canonical_form(want, cfg.canon_max_n).hex()
        probe.check(want, forms == [target], {"k": k, "n": n, "found": len(found)})
        probe.tick()


# ── structural necessary conditions ───────────
def verify_sanity(probe, params, cfg):
    """Degree bounds, every arc on an induced cycle, simple-neighbourhood duality."""
    for k in _ks(params):
        for n, G in dicritical_instances(k, params.get("nmax", 5), cfg):
            s = sanity_lemmas(G, k)
            probe.check(G, s.all_ok, {"k": k, **s.__dict__})
            probe.tick()


def verify_arc_connectivity(probe, params, cfg):
    for k in _ks(params):
        for n, G in dicritical_instances(k, params.get("nmax", 5), cfg):
            if n < 2:
                continue
            lam = arc_connectivity(G)
            probe.check(G, lam >= k - 1, {"k": k, "arc_connectivity": lam})
            probe.tick()


def low_degree_set(G: Digraph, k: int, at_most: bool = False) -> int:
    target = 2 * (k - 1)
    return sum(1 << v for v in range(G.n)
               if (G.degree(v) <= target if at_most else G.degree(v) == target))


def verify_gallai_low_degree(probe, params, cfg):
    """The vertices of degree 2(k−1) induce a directed Gallai forest."""
    for k in _ks(params):
        for n, G in dicritical_instances(k, params.get("nmax", 5), cfg):
            S = low_degree_set(G, k)
            ok, bad = is_gallai_forest(G.induced(S))
            probe.check(G, ok, {"k": k, "S": members(S),
                                "offending_block": None if ok else members(bad)})
            probe.tick()


def verify_components(probe, params, cfg):
    """S = {d <= 2(k−1)}: |π₀(G − S)| <= |π₀(G[S])| (empty set counts as one component)."""
    for k in _ks(params):
        for n, G in dicritical_instances(k, params.get("nmax", 5), cfg):
            S = low_degree_set(G, k, at_most=True)
            outside = component_count(G, G.vertices & ~S)
            inside = component_count(G, S)
            probe.check(G, outside <= inside, {"k": k, "outside": outside, "inside": inside})
            probe.tick()


def verify_low_cut(probe, params, cfg):
    """Every cut with at most k−1 arcs has one monochromatic and one rainbow boundary side."""
    for k in _ks(params):
        if k < 2:
            continue
        for n, G in dicritical_instances(k, params.get("nmax", 5), cfg):
            for V0, V1 in low_cut_partitions(G, k):
                v = low_cut_colour_profile(G, k, V0, V1)
                probe.check(G, v.holds, {"k": k, "V0": members(V0), "V1": members(V1),
                                         "sizes": [sorted(s) for s in v.sizes]})
            probe.tick()
