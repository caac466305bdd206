"""digraph.py — Digraph model + neighbourhood/degree/excess/potential and the contraction,
substitution and join operators.

Vertices are dense ints 0..n-1. Vertex sets are int bitmasks (see core.utils.vset /
members); rows are stored as out/in masks so the hot loops in the solvers and the
census stay in integer arithmetic. Nothing here assumes n <= 64.
"""
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from core.utils import (ColouringError, ParameterError, VertexRangeError,
                        members, popcount, vset)


@dataclass(frozen=True)
class Digraph:
    """Immutable simple digraph: out[v] / inn[v] are bitmasks of out-/in-neighbours."""
    n:   int
    out: tuple
    inn: tuple

    # ── construction ─────────────────────────
    @classmethod
    def empty(cls, n: int) -> "Digraph":
        if n < 0:
            raise ParameterError("order must be >= 0")
        return cls(n, (0,) * n, (0,) * n)

    @classmethod
    def from_arcs(cls, n: int, arcs) -> "Digraph":
        if n < 0:
            raise ParameterError("order must be >= 0")
        out = [0] * n
        inn = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"arc ({u},{v}) out of range for n={n}")
            if u == v:
                raise ParameterError(f"loop at vertex {u}")
            out[u] |= 1 << v
            inn[v] |= 1 << u
        return cls(n, tuple(out), tuple(inn))

    @classmethod
    def from_out_masks(cls, out) -> "Digraph":
        n = len(out)
        inn = [0] * n
        for u, row in enumerate(out):
            if row >> u & 1:
                raise ParameterError(f"loop at vertex {u}")
            if row >> n:
                raise VertexRangeError(f"row {u} has arcs beyond n={n}")
            for v in members(row):
                inn[v] |= 1 << u
        return cls(n, tuple(out), tuple(inn))

    @classmethod
    def from_matrix(cls, adj) -> "Digraph":
        adj = np.asarray(adj, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ParameterError("adjacency matrix must be square")
        if adj.diagonal().any():
            raise ParameterError("adjacency matrix has a loop on the diagonal")
        n = adj.shape[0]
        return cls.from_arcs(n, ((int(u), int(v)) for u, v in zip(*np.nonzero(adj))))

    # ── basic queries ────────────────────────
    @property
    def vertices(self) -> int:
        return (1 << self.n) - 1

    @property
    def arc_count(self) -> int:
        return sum(popcount(r) for r in self.out)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    def arcs(self) -> list:
        """All arcs in lexicographic (source, target) order."""
        return [(u, v) for u in range(self.n) for v in members(self.out[u])]

    def matrix(self) -> np.ndarray:
        adj = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.arcs():
            adj[u, v] = True
        return adj

    def check_vertex(self, v: int):
        if not (isinstance(v, (int, np.integer)) and 0 <= v < self.n):
            raise VertexRangeError(f"vertex {v} out of range for n={self.n}")

    def check_set(self, mask: int):
        if mask < 0 or mask >> self.n:
            raise VertexRangeError(f"vertex set {mask:#x} "
                                   f"not contained in 0..{self.n - 1}")

    def neighbours(self, v: int) -> int:
        return self.out[v] | self.inn[v]

    def degree(self, v: int) -> int:
        return popcount(self.out[v]) + popcount(self.inn[v])

    def is_symmetric(self) -> bool:
        return self.out == self.inn

    def is_complete(self) -> bool:
        full = self.vertices
        return all(self.out[v] == full & ~(1 << v) for v in range(self.n))

    def is_oriented(self) -> bool:
        """No digons."""
        return all(not (self.out[v] & self.inn[v]) for v in range(self.n))

    def digon_count(self) -> int:
        return sum(popcount(self.out[v] & self.inn[v]) for v in range(self.n)) // 2

    # ── derived digraphs ─────────────────────
    def reverse(self) -> "Digraph":
        return Digraph(self.n, self.inn, self.out)

    def relabel(self, perm) -> "Digraph":
        """perm[old] = new."""
        if sorted(perm) != list(range(self.n)):
            raise ParameterError("relabeling must be a permutation of 0..n-1")
        return Digraph.from_arcs(self.n, ((perm[u], perm[v]) for u, v in self.arcs()))

    def induced(self, mask: int) -> "Digraph":
        """G[X], relabeled so that members(X) become 0..|X|-1 in increasing order."""
        self.check_set(mask)
        keep = members(mask)
        index = {v: i for i, v in enumerate(keep)}
        return Digraph.from_arcs(len(keep), ((index[u], index[v]) for u, v in self.arcs()
                                             if u in index and v in index))

    def delete_vertices(self, mask: int) -> "Digraph":
        return self.induced(self.vertices & ~mask)

    def delete_arcs(self, arcs) -> "Digraph":
        out = list(self.out)
        for u, v in arcs:
            if not self.has_arc(u, v):
                raise ParameterError(f"arc ({u},{v}) not present")
            out[u] &= ~(1 << v)
        return Digraph.from_out_masks(out)

    def add_arcs(self, arcs) -> "Digraph":
        return Digraph.from_arcs(self.n, list(self.arcs()) + list(arcs))

    def disjoint_union(self, other: "Digraph") -> "Digraph":
        shift = self.n
        return Digraph.from_arcs(self.n + other.n,
                                 self.arcs() + [(u + shift, v + shift) for u, v in other.arcs()])

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={self.arcs()})"


# ── neighbourhoods and degrees ───────────────
@dataclass(frozen=True)
class NeighbourhoodProfile:
    nplus:    int
    nminus:   int
    nd:       int
    ns:       int
    ns_plus:  int
    ns_minus: int

    def swapped(self) -> "NeighbourhoodProfile":
        return NeighbourhoodProfile(self.nminus, self.nplus, self.nd, self.ns,
                                    self.ns_minus, self.ns_plus)


@dataclass(frozen=True)
class Degrees:
    d_plus:  int
    d_minus: int
    d:       int
    d_min:   int
    d_max:   int


def set_out_neighbours(G: Digraph, X: int) -> int:
    """N^+(X): vertices outside X receiving an arc from X."""
    acc = 0
    for v in members(X):
        acc |= G.out[v]
    return acc & ~X


def set_in_neighbours(G: Digraph, X: int) -> int:
    """N^-(X): vertices outside X sending an arc into X."""
    acc = 0
    for v in members(X):
        acc |= G.inn[v]
    return acc & ~X


def neighborhood_profile(G: Digraph, v: int) -> NeighbourhoodProfile:
    G.check_vertex(v)
    nplus, nminus = G.out[v], G.inn[v]
    nd = nplus & nminus
    ns = (nplus | nminus) & ~nd
    return NeighbourhoodProfile(nplus, nminus, nd, ns, ns & nplus, ns & nminus)


def degrees(G: Digraph, v: int) -> Degrees:
    G.check_vertex(v)
    dp, dm = popcount(G.out[v]), popcount(G.inn[v])
    return Degrees(dp, dm, dp + dm, min(dp, dm), max(dp, dm))


def max_dmax(G: Digraph) -> int:
    """Δ_max(G) = max over vertices of max(d^+, d^-); 0 for the empty digraph."""
    return max((degrees(G, v).d_max for v in range(G.n)), default=0)


# ── excess ────────────────────────────────────
def excess(G: Digraph, k: int, X: int = None) -> int:
    """ε_k(X) = Σ_{u∈X} d(u) − 2(k−1); X defaults to V(G)."""
    if k < 2:
        raise ParameterError("excess needs k >= 2")
    X = G.vertices if X is None else X
    G.check_set(X)
    return sum(G.degree(u) - 2 * (k - 1) for u in members(X))


# ── potential ─────────────────────────────────
def default_eps(k: int) -> Fraction:
    return Fraction(1, 2) - Fraction(1, k - 1)


def potential(G: Digraph, k: int, eps=None) -> Fraction:
    """ρ(G) = (k−1+ε)|V| − |A| in exact rationals."""
    if k < 4:
        raise ParameterError("potential is defined for k >= 4")
    eps = default_eps(k) if eps is None else Fraction(eps)
    if not (0 < eps <= default_eps(k)):
        raise ParameterError(f"eps must lie in (0, {default_eps(k)}]")
    return (k - 1 + eps) * G.n - G.arc_count


# ── contraction / substitution / joins ──────
def _as_mask(part) -> int:
    return part if isinstance(part, int) else vset(part)


def contract(G: Digraph, parts):
    """G/(X_1..X_m). Returns (digraph, projection) with projection[v] = new id.

    Untouched vertices keep their relative order as ids 0..t-1; part i becomes t+i.
    """
    masks = [_as_mask(p) for p in parts]
    seen = 0
    for m in masks:
        G.check_set(m)
        if not m:
            raise ParameterError("contraction parts must be nonempty")
        if m & seen:
            raise ParameterError("contraction parts overlap")
        seen |= m
    untouched = members(G.vertices & ~seen)
    proj = [0] * G.n
    for i, v in enumerate(untouched):
        proj[v] = i
    for i, m in enumerate(masks):
        for v in members(m):
            proj[v] = len(untouched) + i
    size = len(untouched) + len(masks)
    arcs = {(proj[u], proj[v]) for u, v in G.arcs() if proj[u] != proj[v]}
    return Digraph.from_arcs(size, sorted(arcs)), proj


def y_construction(G: Digraph, R: int, phi: dict) -> Digraph:
    """Y(G, R, φ): contract each colour class of φ on G[R], then join the classes by digons."""
    from core.colouring import is_valid_colouring

    R = _as_mask(R)
    G.check_set(R)
    if set(phi) != set(members(R)):
        raise ColouringError("phi must colour exactly the vertices of R")
    if not is_valid_colouring(G, phi):
        raise ColouringError("phi is not a dicolouring of G[R]")
    colours = sorted(set(phi.values()))
    parts = [vset(v for v in phi if phi[v] == c) for c in colours]
    H, _ = contract(G, parts)
    first = H.n - len(parts)
    merged = range(first, H.n)
    return H.add_arcs((i, j) for i in merged for j in merged
                      if i != j and not H.has_arc(i, j))


def dirac_join(G1: Digraph, G2: Digraph) -> Digraph:
    """↔K_2(G1, G2): disjoint union plus every arc both ways across."""
    U = G1.disjoint_union(G2)
    cross = [(u, G1.n + v) for u in range(G1.n) for v in range(G2.n)]
    return U.add_arcs(cross + [(v, u) for u, v in cross])


def substitute(G: Digraph, family) -> Digraph:
    """G(G'_0, ..., G'_{n-1}): blow up vertex u into family[u]."""
    family = list(family)
    if len(family) != G.n:
        raise ParameterError(f"substitution needs {G.n} digraphs, got {len(family)}")
    offset, start = 0, []
    for H in family:
        start.append(offset)
        offset += H.n
    arcs = []
    for u, H in enumerate(family):
        arcs += [(start[u] + a, start[u] + b) for a, b in H.arcs()]
    for u, v in G.arcs():
        arcs += [(start[u] + a, start[v] + b)
                 for a in range(family[u].n) for b in range(family[v].n)]
    return Digraph.from_arcs(offset, arcs)
