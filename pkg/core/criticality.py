"""criticality.py — k-dicriticality test, dicritical subdigraph extraction and the
degree / induced-cycle / simple-neighbourhood sanity checks."""
from dataclasses import dataclass

from core.colouring import dichromatic_number, k_dicolourable
from core.digraph import Digraph, degrees, neighborhood_profile
from core.utils import ParameterError, log, members


@dataclass(frozen=True)
class SanityReport:
    min_degree_ok:               bool
    dmin_ok:                     bool
    induced_cycle_ok:            bool
    simple_neighbour_duality_ok: bool

    @property
    def all_ok(self) -> bool:
        return (self.min_degree_ok and self.dmin_ok and self.induced_cycle_ok
                and self.simple_neighbour_duality_ok)


@dataclass(frozen=True)
class CriticalityReport:
    chi:                         int
    is_dicritical:               bool
    violating_arc:               tuple
    min_degree_ok:               bool
    dmin_ok:                     bool
    induced_cycle_ok:            bool
    simple_neighbour_duality_ok: bool

    def to_dict(self) -> dict:
        return {
            "chi":                         self.chi,
            "is_dicritical":               self.is_dicritical,
            "violating_arc":               list(self.violating_arc) if self.violating_arc else None,
            "min_degree_ok":               self.min_degree_ok,
            "dmin_ok":                     self.dmin_ok,
            "induced_cycle_ok":            self.induced_cycle_ok,
            "simple_neighbour_duality_ok": self.simple_neighbour_duality_ok,
        }


# ── sanity ────────────────────────────────────
def _on_induced_cycle(G: Digraph, u: int, v: int) -> bool:
    """Is the arc (u, v) on an induced directed cycle? Searches induced v→u paths."""
    if G.has_arc(v, u):
        return True

    def rec(tail, path):
        for w in members(G.out[tail] & ~path):
            if w == u:
                if G.inn[u] & path == 1 << tail and G.out[u] & path == 1 << v:
                    return True
                continue
            if G.inn[w] & path != 1 << tail or G.out[w] & path:
                continue
            # u must still be reachable without a chord: arcs w–u other than w→u are chords
            if G.out[u] >> w & 1:
                continue
            if rec(w, path | 1 << w):
                return True
        return False

    return rec(v, 1 << v)


def arc_on_induced_cycle(G: Digraph, u: int, v: int) -> bool:
    if not G.has_arc(u, v):
        raise ParameterError(f"arc ({u},{v}) not present")
    return _on_induced_cycle(G, u, v)


def sanity_lemmas(G: Digraph, k: int) -> SanityReport:
    degs = [degrees(G, v) for v in range(G.n)]
    duality = True
    for v in range(G.n):
        p = neighborhood_profile(G, v)
        if (p.ns_plus == 0) != (p.ns_minus == 0):
            duality = False
            break
    return SanityReport(
        min_degree_ok=all(d.d >= 2 * (k - 1) for d in degs),
        dmin_ok=all(d.d_min >= k - 1 for d in degs),
        induced_cycle_ok=all(_on_induced_cycle(G, a, b) for a, b in G.arcs()),
        simple_neighbour_duality_ok=duality,
    )


# ── dicriticality ─────────────────────────────
def _at_least(G: Digraph, k: int) -> bool:
    """χ⃗(G) >= k."""
    return k_dicolourable(G, k - 1) is None


def is_k_dicritical(G: Digraph, k: int) -> CriticalityReport:
    if k < 1:
        raise ParameterError("k must be >= 1")
    chi, _ = dichromatic_number(G)
    s = sanity_lemmas(G, k)
    ok, bad = chi == k, None
    if ok and k == 1:
        ok = G.n == 1
    elif ok and any(G.degree(v) == 0 for v in range(G.n)):
        ok = False
    elif ok:
        for a in G.arcs():
            if _at_least(G.delete_arcs([a]), k):
                ok, bad = False, a
                break
    return CriticalityReport(chi, ok, bad, s.min_degree_ok, s.dmin_ok,
                             s.induced_cycle_ok, s.simple_neighbour_duality_ok)


def is_dicritical(G: Digraph) -> bool:
    chi, _ = dichromatic_number(G)
    return chi >= 1 and is_k_dicritical(G, chi).is_dicritical


def extract_k_dicritical(G: Digraph, k: int) -> Digraph:
    """Greedy deletion to fixpoint: arcs in lexicographic order, then vertices in increasing order."""
    if k < 1:
        raise ParameterError("k must be >= 1")
    if not _at_least(G, k):
        raise ParameterError(f"χ⃗(G) < {k}: no {k}-dicritical subdigraph")
    changed = True
    while changed:
        changed = False
        for a in G.arcs():
            H = G.delete_arcs([a])
            if _at_least(H, k):
                G, changed = H, True
        v = 0
        while v < G.n:
            H = G.delete_vertices(1 << v)
            if _at_least(H, k):
                G, changed = H, True
            else:
                v += 1
    log("SOLVER", f"extracted {k}-dicritical subdigraph on {G.n} vertices, {G.arc_count} arcs")
    return G
