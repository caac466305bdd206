"""structure.py — Components, blocks, directed Gallai forests, arc-connectivity, twins/clusters
and the component/partition bipartite graph with its 2-forests.
"""
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

import networkx as nx

from core.colouring import all_dicolourings
from core.digraph import Digraph, set_in_neighbours, set_out_neighbours
from core.utils import HypothesisViolation, ParameterError, lowest, members, popcount


# ── networkx views ────────────────────────────
def underlying_graph(G: Digraph) -> nx.Graph:
    U = nx.Graph()
    U.add_nodes_from(range(G.n))
    U.add_edges_from(G.arcs())
    return U


def to_networkx(G: Digraph, capacity: int = None) -> nx.DiGraph:
    D = nx.DiGraph()
    D.add_nodes_from(range(G.n))
    if capacity is None:
        D.add_edges_from(G.arcs())
    else:
        D.add_edges_from(G.arcs(), capacity=capacity)
    return D


# ── components ────────────────────────────────
def components(G: Digraph, within: int = None) -> list:
    """Weakly connected components of G[within] as bitmasks, ordered by smallest vertex."""
    left = G.vertices if within is None else within & G.vertices
    out = []
    while left:
        comp = frontier = 1 << lowest(left)
        while frontier:
            nxt = 0
            for v in members(frontier):
                nxt |= G.out[v] | G.inn[v]
            frontier = nxt & left & ~comp
            comp |= frontier
        out.append(comp)
        left &= ~comp
    return out


def strong_components(G: Digraph) -> list:
    comps = [sum(1 << v for v in c) for c in nx.strongly_connected_components(to_networkx(G))]
    return sorted(comps, key=lowest)


def is_connected(G: Digraph, within: int = None) -> bool:
    return len(components(G, within)) <= 1


def is_strongly_connected(G: Digraph) -> bool:
    return G.n <= 1 or len(strong_components(G)) == 1


def component_count(G: Digraph, within: int = None) -> int:
    """|π₀| with the empty set counted as one connected component."""
    return max(1, len(components(G, within)))


# ── blocks ────────────────────────────────────
class BlockKind(Enum):
    SINGLE_ARC         = "SingleArc"
    CYCLE              = "Cycle"
    SYMMETRIC_ODD_CYCLE = "SymmetricOddCycle"
    SYMMETRIC_COMPLETE = "SymmetricComplete"
    OTHER              = "Other"


GALLAI_KINDS = {BlockKind.SINGLE_ARC, BlockKind.CYCLE,
                BlockKind.SYMMETRIC_ODD_CYCLE, BlockKind.SYMMETRIC_COMPLETE}


@dataclass(frozen=True)
class BlockDecomposition:
    blocks:              list
    separating_vertices: int
    kinds:               list = field(default_factory=list)

    def is_leaf(self, i: int) -> bool:
        return popcount(self.blocks[i] & self.separating_vertices) <= 1

    def leaf_blocks(self) -> list:
        return [b for i, b in enumerate(self.blocks) if self.is_leaf(i)]


def classify_block(G: Digraph, B: int) -> BlockKind:
    size = popcount(B)
    arcs = sum(popcount(G.out[v] & B) for v in members(B))
    if size == 2:
        return BlockKind.SINGLE_ARC if arcs == 1 else BlockKind.SYMMETRIC_COMPLETE
    # complete before odd cycle: ↔K_3 is both
    if arcs == size * (size - 1):
        return BlockKind.SYMMETRIC_COMPLETE
    symmetric = all(G.out[v] & B == G.inn[v] & B for v in members(B))
    if symmetric:
        if size % 2 and all(popcount(G.out[v] & B) == 2 for v in members(B)):
            return BlockKind.SYMMETRIC_ODD_CYCLE
        return BlockKind.OTHER
    if arcs == size and all(popcount(G.out[v] & B) == 1 and popcount(G.inn[v] & B) == 1
                            for v in members(B)):
        return BlockKind.CYCLE
    return BlockKind.OTHER


def blocks(G: Digraph) -> BlockDecomposition:
    U = underlying_graph(G)
    found = sorted((sum(1 << v for v in comp) for comp in nx.biconnected_components(U)),
                   key=lambda b: (lowest(b), members(b)))
    cut = sum(1 << v for v in nx.articulation_points(U))
    return BlockDecomposition(found, cut, [classify_block(G, b) for b in found])


def is_gallai_forest(G: Digraph):
    """(True, None) or (False, first offending block)."""
    dec = blocks(G)
    for b, kind in zip(dec.blocks, dec.kinds):
        if kind not in GALLAI_KINDS:
            return False, b
    return True, None


# ── arc-connectivity ──────────────────────────
def arc_connectivity(G: Digraph) -> int:
    """min |A(V0, V1)| over bipartitions, via unit-capacity max-flow from/to vertex 0."""
    if G.n < 2:
        raise ParameterError("arc-connectivity needs at least two vertices")
    D = to_networkx(G, capacity=1)
    best = G.arc_count
    for v in range(1, G.n):
        best = min(best,
                   nx.maximum_flow_value(D, 0, v),
                   nx.maximum_flow_value(D, v, 0))
        if best == 0:
            break
    return int(best)


def cut_size(G: Digraph, V0: int, V1: int) -> int:
    return sum(popcount(G.out[v] & V1) for v in members(V0))


def low_cut_partitions(G: Digraph, k: int):
    """Every ordered bipartition (V0, V1) with |A(V0, V1)| <= k−1."""
    full = G.vertices
    for V0 in range(1, full):
        V1 = full & ~V0
        if cut_size(G, V0, V1) <= k - 1:
            yield V0, V1


@dataclass(frozen=True)
class LowCutVerdict:
    holds:      bool
    mono_side:  int           # side i with |φ_i(V_i*)| = 1 always, or -1
    sizes:      tuple         # (sizes seen on side 0, sizes seen on side 1)
    witness:    dict = None   # a colouring of the side contradicting the profile


def low_cut_colour_profile(G: Digraph, k: int, V0: int, V1: int) -> LowCutVerdict:
    """Check the colour profile on the boundary of a cut with at most k−1 arcs."""
    if V0 & V1 or (V0 | V1) != G.vertices or not V0 or not V1:
        raise ParameterError("(V0, V1) must be a partition of V(G) into nonempty sets")
    if cut_size(G, V0, V1) > k - 1:
        raise ParameterError(f"|A(V0, V1)| = {cut_size(G, V0, V1)} exceeds k−1 = {k - 1}")
    stars = (set_in_neighbours(G, V1), set_out_neighbours(G, V0))
    sides = (V0, V1)
    sizes, samples = [], []
    for side, star in zip(sides, stars):
        seen, sample = set(), {}
        for phi in all_dicolourings(G, side, k - 1):
            s = len({phi[v] for v in members(star)})
            if s not in seen:
                seen.add(s)
                sample[s] = phi
        if not seen:
            raise HypothesisViolation(f"side {members(side)} has no {k - 1}-dicolouring, "
                                      f"G is not {k}-dicritical")
        sizes.append(frozenset(seen))
        samples.append(sample)
    for i in (0, 1):
        if sizes[i] == {1} and sizes[1 - i] == {k - 1}:
            return LowCutVerdict(True, i, tuple(sizes))
    bad = next((samples[i][s] for i in (0, 1) for s in sorted(sizes[i])
                if s not in (1, k - 1)), samples[0][min(sizes[0])])
    return LowCutVerdict(False, -1, tuple(sizes), bad)


# ── twins / clusters ──────────────────────────
def twins(G: Digraph, u: int, v: int) -> bool:
    G.check_vertex(u)
    G.check_vertex(v)
    if u == v:
        return False
    return (G.out[u] | 1 << u) == (G.out[v] | 1 << v) and \
           (G.inn[u] | 1 << u) == (G.inn[v] | 1 << v)


def clusters(G: Digraph, k: int) -> list:
    """Partition of S = {v : d(v) = 2(k−1)} into maximal cliques of pairwise twins."""
    if k < 3:
        raise ParameterError("clusters are defined for k >= 3")
    S = [v for v in range(G.n) if G.degree(v) == 2 * (k - 1)]
    groups = []
    for v in S:
        for g in groups:
            if twins(G, lowest(g), v):
                g_idx = groups.index(g)
                groups[g_idx] = g | 1 << v
                break
        else:
            groups.append(1 << v)
    return groups


# ── component/partition bipartite graph ───────
@dataclass(frozen=True)
class BipartiteAux:
    left:  list      # components of G[X] (bitmasks)
    right: list      # unions of the parts of P (bitmasks)
    edges: list      # (i, j) pairs, left index / right index

    def left_neighbours(self, i: int) -> list:
        return [j for a, j in self.edges if a == i]


def bipartite_aux(G: Digraph, X: int, P) -> BipartiteAux:
    G.check_set(X)
    outside = components(G, G.vertices & ~X)
    parts = [[c if isinstance(c, int) else sum(1 << v for v in c) for c in part] for part in P]
    flat = sorted(c for part in parts for c in part)
    if flat != sorted(outside) or any(not part for part in parts):
        raise ParameterError("P must partition the components of G − X into nonempty parts")
    left = components(G, X)
    right = sorted((sum(part) for part in parts), key=lowest)
    edges = []
    for i, S in enumerate(left):
        reach = set_out_neighbours(G, S) | set_in_neighbours(G, S)
        edges += [(i, j) for j, T in enumerate(right) if reach & T]
    return BipartiteAux(left, right, edges)


def find_root(parent, a):
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


def find_two_forest(B: BipartiteAux, side: str = "left"):
    """A spanning forest of B where every `side` vertex has degree 2, or None."""
    if side not in ("left", "right"):
        raise ParameterError("side must be 'left' or 'right'")
    edges = B.edges if side == "left" else [(j, i) for i, j in B.edges]
    count = len(B.left) if side == "left" else len(B.right)
    adj = {i: sorted(j for a, j in edges if a == i) for i in range(count)}
    chosen = []

    def rec(i, parent):
        if i == count:
            return True
        for t1, t2 in combinations(adj[i], 2):
            p = dict(parent)
            s, r1, r2 = find_root(p, ("S", i)), find_root(p, ("T", t1)), find_root(p, ("T", t2))
            if r1 == r2 or s == r1 or s == r2:
                continue
            p[s] = r1
            p[find_root(p, r2)] = r1
            chosen.extend([(i, t1), (i, t2)])
            if rec(i + 1, p):
                return True
            del chosen[-2:]
        return False

    nodes = [("S", i) for i in range(count)] + \
            [("T", j) for j in range(len(B.right) if side == "left" else len(B.left))]
    if not rec(0, {v: v for v in nodes}):
        return None
    if side == "right":
        return sorted((j, i) for i, j in chosen)
    return sorted(chosen)
