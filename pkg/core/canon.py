"""canon.py — Canonical forms for small digraphs.

Vertices are first split by colour refinement on (d+, d−, digons); only labelings that
list the refined cells in signature order are searched. Among those, the labeling whose
growing upper-left key (for position i: arcs to and from positions < i) is smallest wins,
with prefix pruning and transposition-automorphism pruning. The form is the row-major
adjacency matrix of that labeling, packed with numpy.
"""
from dataclasses import dataclass

import numpy as np

from core.digraph import Digraph
from core.utils import ParameterError, members, popcount

DEFAULT_CANON_MAX_N = 9


@dataclass(frozen=True, order=True)
class CanonicalForm:
    n:    int
    data: bytes

    def hex(self) -> str:
        return f"{self.n:02x}{self.data.hex()}"

    def to_digraph(self) -> Digraph:
        bits = np.unpackbits(np.frombuffer(self.data, dtype=np.uint8))[: self.n * self.n]
        return Digraph.from_matrix(bits.reshape(self.n, self.n))

    def __str__(self):
        return self.hex()


def refine(G: Digraph) -> list:
    """Stable refined colour per vertex; colours are ranks of canonical signatures."""
    colour = [(popcount(G.out[v]), popcount(G.inn[v]), popcount(G.out[v] & G.inn[v]))
              for v in range(G.n)]
    ranks = sorted(set(colour))
    colour = [ranks.index(c) for c in colour]
    while True:
        sig = [(colour[v],
                tuple(sorted(colour[u] for u in members(G.out[v]))),
                tuple(sorted(colour[u] for u in members(G.inn[v]))))
               for v in range(G.n)]
        ranks = sorted(set(sig))
        nxt = [ranks.index(s) for s in sig]
        if len(ranks) == len(set(colour)):
            return nxt
        colour = nxt


def _swap_automorphism(G: Digraph, a: int, b: int) -> bool:
    """Is the transposition (a b) an automorphism of G?"""
    rest = ~(1 << a | 1 << b)
    return (G.out[a] & rest == G.out[b] & rest and G.inn[a] & rest == G.inn[b] & rest
            and G.has_arc(a, b) == G.has_arc(b, a))


def canonical_labeling(G: Digraph, max_n: int = DEFAULT_CANON_MAX_N) -> list:
    """order[i] = original vertex placed at position i in the canonical labeling."""
    if G.n > max_n:
        raise ParameterError(f"canonical form limited to n <= {max_n} (got {G.n})")
    colour = refine(G)
    slots = sorted(colour)
    best_key, best_order = None, None
    key, order = [], []

    def rec(i, used):
        nonlocal best_key, best_order
        if i == G.n:
            if best_key is None or key < best_key:
                best_key, best_order = list(key), list(order)
            return
        tried = []
        for v in range(G.n):
            if used >> v & 1 or colour[v] != slots[i]:
                continue
            if any(_swap_automorphism(G, t, v) for t in tried):
                continue
            tried.append(v)
            bits = [b for p in order for b in (G.has_arc(p, v), G.has_arc(v, p))]
            mark = len(key)
            key.extend(bits)
            if best_key is None or key <= best_key[:len(key)]:
                order.append(v)
                rec(i + 1, used | 1 << v)
                order.pop()
            del key[mark:]

    rec(0, 0)
    return best_order


def canonical_form(G: Digraph, max_n: int = DEFAULT_CANON_MAX_N) -> CanonicalForm:
    order = canonical_labeling(G, max_n)
    adj = G.matrix()[np.ix_(order, order)] if G.n else np.zeros((0, 0), dtype=bool)
    return CanonicalForm(G.n, np.packbits(adj.flatten()).tobytes())


def canonical_digraph(G: Digraph, max_n: int = DEFAULT_CANON_MAX_N) -> Digraph:
    return canonical_form(G, max_n).to_digraph()


def is_isomorphic(G: Digraph, H: Digraph, max_n: int = DEFAULT_CANON_MAX_N) -> bool:
    if G.n != H.n or G.arc_count != H.arc_count:
        return False
    return canonical_form(G, max_n) == canonical_form(H, max_n)
