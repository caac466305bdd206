"""theorems/instances.py — Instance streams for the verifiers: census slices and seeded random digraphs."""
import numpy as np

from core.digraph import Digraph
from core.structure import is_connected
from core.utils import RunConfig, members
from scanner.census_engine import enumerate_k_dicritical


def dicritical_instances(k: int, n_max: int, cfg: RunConfig, n_min: int = None):
    """(n, G) for every k-dicritical G with n_min <= n <= n_max."""
    for n in range(max(k, n_min or k), n_max + 1):
        for G in enumerate_k_dicritical(k, n, cfg):
            yield n, G


def rng_for(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_digraph(rng: np.random.Generator, n: int, p: float = 0.4, p_digon: float = 0.2) -> Digraph:
    """Each unordered pair: digon with p_digon, else one arc (random direction) with p."""
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            r = rng.random()
            if r < p_digon:
                arcs += [(u, v), (v, u)]
            elif r < p_digon + p:
                arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return Digraph.from_arcs(n, arcs)


def random_connected_digraph(rng: np.random.Generator, n: int, p: float = 0.4,
                             p_digon: float = 0.2, tries: int = 50):
    for _ in range(tries):
        G = random_digraph(rng, n, p, p_digon)
        if is_connected(G):
            return G
    return None


def random_connected_subset(rng: np.random.Generator, G: Digraph, size: int) -> int:
    """Grow a weakly connected vertex set of at most `size` vertices from a random root."""
    if G.n == 0 or size <= 0:
        return 0
    X = 1 << int(rng.integers(G.n))
    while bin(X).count("1") < size:
        frontier = 0
        for v in members(X):
            frontier |= G.neighbours(v)
        frontier &= ~X
        if not frontier:
            break
        choices = members(frontier)
        X |= 1 << choices[int(rng.integers(len(choices)))]
    return X


def random_subset(rng: np.random.Generator, n: int, p: float = 0.5) -> int:
    return sum(1 << v for v in range(n) if rng.random() < p)
