"""theorems/list_engine.py — List-dicolouring probes, colour shifting, the component inequality
under its general hypotheses, and 2-forests of the component bipartite graph."""
from itertools import combinations, islice

from core.colouring import (chi, is_valid_colouring, list_dicolourable, list_dicolourings,
                            shift, shift_around_cycle)
from core.digraph import Digraph, degrees
from core.structure import (BipartiteAux, component_count, components, find_root,
                            find_two_forest, is_gallai_forest)
from core.utils import DicritixError, members
from theorems.instances import random_connected_digraph, random_connected_subset, rng_for


# ── list dicolouring: not L-dicolourable ⇒ G[X] is a Gallai forest ──
def _random_lists(rng, G: Digraph, X: int, palette: int = 3) -> dict:
    """|L(x)| in d_max(x)..d_max(x)+2 on X over a pool that can exceed d_max(x); 1 or 2
    colours elsewhere."""
    L = {}
    for v in range(G.n):
        if X >> v & 1:
            d = max(1, degrees(G, v).d_max)
            size = d if rng.random() < 0.8 else d + int(rng.integers(1, 3))
            pool = max(size, d + int(rng.integers(0, 3)))
            L[v] = sorted(int(c) + 1 for c in rng.choice(pool, size=size, replace=False))
        else:
            size = int(rng.integers(1, 3))
            L[v] = sorted(int(c) + 1 for c in rng.choice(palette, size=size, replace=False))
    return L


def list_facts(G: Digraph, X: int, L: dict, colourings: int = 20):
    """Check the facts forced on every x ∈ X; returns the first failing fact or None."""
    for x in members(X):
        dg = degrees(G, x)
        if not len(L[x]) == dg.d_plus == dg.d_minus:
            return {"fact": "list size equals both degrees", "x": x}
        rest = G.vertices & ~(1 << x)
        sample = list(islice(list_dicolourings(G, L, rest), colourings))
        if not sample:
            return {"fact": "G − x is L-dicolourable", "x": x}
        for phi in sample:
            outs = {phi[u] for u in members(G.out[x])}
            ins = {phi[u] for u in members(G.inn[x])}
            if not set(L[x]) <= outs & ins:
                return {"fact": "every colour of L(x) on both sides", "x": x, "phi": phi}
            for y in members(G.neighbours(x) & X):
                try:
                    shifted = shift(G, L, phi, x, y)
                except DicritixError as e:
                    return {"fact": "shifting keeps an L-dicolouring", "x": x, "y": y,
                            "phi": phi, "error": str(e)}
                if not is_valid_colouring(G, shifted):
                    return {"fact": "shifting keeps an L-dicolouring", "x": x, "y": y, "phi": phi}
    return None


def verify_list_gallai(probe, params, cfg):
    probe.provenance("random")
    rng = rng_for(cfg.seed)
    wanted, nmax = params.get("samples", 10_000), params.get("nmax", 7)
    attempts, hits = 0, 0
    while hits < wanted and attempts < wanted * params.get("attempt_factor", 300):
        attempts += 1
        n = int(rng.integers(2, nmax + 1))
        G = random_connected_digraph(rng, n, p=0.3, p_digon=0.4)
        if G is None:
            continue
        X = random_connected_subset(rng, G, int(rng.integers(1, n + 1)))
        L = _random_lists(rng, G, X)
        if next(list_dicolourings(G, L, G.vertices & ~X), None) is None:
            continue
        if list_dicolourable(G, L) is not None:
            continue
        hits += 1
        ok, bad = is_gallai_forest(G.induced(X))
        failed = list_facts(G, X, L)
        probe.check(G, ok and failed is None,
                    {"X": members(X), "lists": L, "gallai": ok, "fact": failed,
                     "offending_block": None if ok else members(bad)})
        if hits % 200 == 0:
            probe.tick()
    probe.note(f"{hits} non-L-dicolourable instances from {attempts} draws")


# ── shifting around a weak cycle ──────────────
# weak cycle v1..v5 (ids 0..4): v2→v1, v5→v1, v5→v4, v4→v3, v2→v3
SHIFT_EXAMPLE_ARCS = [(1, 0), (4, 0), (4, 3), (3, 2), (1, 2)]
SHIFT_EXAMPLE_START = {1: 1, 2: 2, 3: 1, 4: 3}
SHIFT_EXAMPLE_PANELS = [
    {1: 1, 2: 2, 3: 1, 4: 3},
    {0: 3, 1: 1, 2: 2, 3: 1},
    {0: 3, 1: 1, 2: 2, 4: 1},
    {0: 3, 1: 1, 3: 2, 4: 1},
    {0: 3, 2: 1, 3: 2, 4: 1},
    {1: 3, 2: 1, 3: 2, 4: 1},
]


def shift_trace(G: Digraph, L: dict, phi: dict, C, steps: int, direction="clockwise") -> list:
    panels = [dict(phi)]
    for _ in range(steps):
        panels.append(shift_around_cycle(G, L, panels[-1], C, direction, 1))
    return panels


def verify_shift_trace(probe, params, cfg):
    probe.provenance("family")
    G = Digraph.from_arcs(5, SHIFT_EXAMPLE_ARCS)
    L = {v: [1, 2, 3] for v in range(5)}
    panels = shift_trace(G, L, SHIFT_EXAMPLE_START, list(range(5)), 5)
    for i, (got, want) in enumerate(zip(panels, SHIFT_EXAMPLE_PANELS)):
        probe.check(G, got == want, {"panel": i, "got": got, "want": want})
    back = shift_around_cycle(G, L, panels[-1], list(range(5)), "counterclockwise", 5)
    probe.check(G, back == SHIFT_EXAMPLE_START, {"inverse": back})


# ── component inequality under its general hypotheses ──
def verify_strengthened_components(probe, params, cfg):
    """d(u) <= 2(k−1) on X, χ⃗(G − S) <= k−1 for every component S of G[X] and
    |π₀(G − X)| > |π₀(G[X])| together force χ⃗(G) <= k−1."""
    probe.provenance("random")
    rng = rng_for(cfg.seed)
    k = params.get("k", 3)
    hits = 0
    for _ in range(params.get("samples", 2000)):
        n = int(rng.integers(3, params.get("nmax", 7) + 1))
        G = random_connected_digraph(rng, n, p=0.35, p_digon=0.3)
        if G is None:
            continue
        low = [v for v in range(G.n) if G.degree(v) <= 2 * (k - 1)]
        X = sum(1 << v for v in low if rng.random() < 0.6)
        if not X:
            continue
        parts = components(G, X)
        if component_count(G, G.vertices & ~X) <= len(parts):
            continue
        if any(chi(G.delete_vertices(S)) > k - 1 for S in parts):
            continue
        hits += 1
        c = chi(G)
        probe.check(G, c <= k - 1, {"k": k, "X": members(X), "chi": c})
        probe.tick()
    probe.note(f"{hits} random instances met the hypotheses")


# ── 2-forests ─────────────────────────────────
def two_forest_bruteforce(B: BipartiteAux) -> bool:
    """Exhaustive search over edge subsets: every left vertex of degree 2, no cycle."""
    left = len(B.left)
    for subset in combinations(B.edges, 2 * left):
        if any(sum(1 for a, _ in subset if a == i) != 2 for i in range(left)):
            continue
        parent = {("S", i): ("S", i) for i in range(left)}
        parent.update({("T", j): ("T", j) for j in range(len(B.right))})
        acyclic = True
        for i, j in subset:
            a, b = find_root(parent, ("S", i)), find_root(parent, ("T", j))
            if a == b:
                acyclic = False
                break
            parent[a] = b
        if acyclic:
            return True
    return False


def random_bipartite(rng, s: int, t: int, p: float = 0.6) -> BipartiteAux:
    edges = [(i, j) for i in range(s) for j in range(t) if rng.random() < p]
    return BipartiteAux([1 << i for i in range(s)], [1 << (s + j) for j in range(t)], edges)


def _bipartite_components(B: BipartiteAux, drop: set) -> int:
    parent = {("S", i): ("S", i) for i in range(len(B.left)) if i not in drop}
    parent.update({("T", j): ("T", j) for j in range(len(B.right))})
    for i, j in B.edges:
        if i in drop:
            continue
        a, b = find_root(parent, ("S", i)), find_root(parent, ("T", j))
        if a != b:
            parent[a] = b
    return len({find_root(parent, v) for v in parent})


def spread_condition(B: BipartiteAux) -> bool:
    """B connected and |π₀(B − S′)| <= |S′| for every proper nonempty S′ ⊂ S."""
    s = len(B.left)
    if _bipartite_components(B, set()) != 1:
        return False
    for r in range(1, s):
        for drop in combinations(range(s), r):
            if _bipartite_components(B, set(drop)) > r:
                return False
    return True


def all_bipartite(max_edges: int = 12):
    """Every bipartite graph on sides S, T (both nonempty) with |S|·|T| <= max_edges, one per edge subset."""
    for s in range(1, max_edges + 1):
        for t in range(1, max_edges // s + 1):
            pairs = [(i, j) for i in range(s) for j in range(t)]
            left = [1 << i for i in range(s)]
            right = [1 << (s + j) for j in range(t)]
            for mask in range(1 << len(pairs)):
                yield BipartiteAux(left, right, [e for b, e in enumerate(pairs) if mask >> b & 1])


def verify_two_forest(probe, params, cfg):
    """find_two_forest agrees with brute force on every small bipartite graph;
    |T| >= |S|+1 with the spread condition forces a 2-forest."""
    forced = 0
    for count, B in enumerate(all_bipartite(params.get("max_edges", 12)), 1):
        s, t = len(B.left), len(B.right)
        F = find_two_forest(B)
        holds = (F is not None) == two_forest_bruteforce(B)
        if t >= s + 1 and spread_condition(B):
            forced += 1
            holds = holds and F is not None
        probe.check(None, holds, {"S": s, "T": t, "edges": B.edges, "found": F})
        if count % 1000 == 0:
            probe.tick()
    probe.note(f"{forced} instances met the spread condition")
