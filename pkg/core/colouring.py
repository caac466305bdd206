"""colouring.py — Acyclic sets, exact dicolouring, greedy extension, list dicolouring, shifting.

A colouring is a plain dict vertex -> colour (colours are positive ints); a partial
colouring simply omits the uncoloured vertices. A list assignment is a dict
vertex -> iterable of colours.
"""
from core.digraph import Digraph
from core.utils import ColouringError, HypothesisViolation, ParameterError, members, vset


# ── acyclicity ────────────────────────────────
def _closes_cycle(G: Digraph, cls: int, v: int) -> bool:
    """Would adding v to the acyclic class `cls` create a directed cycle through v?"""
    target = G.inn[v] & cls
    if not target:
        return False
    reached = frontier = G.out[v] & cls
    while frontier:
        if reached & target:
            return True
        nxt = 0
        for u in members(frontier):
            nxt |= G.out[u]
        frontier = nxt & cls & ~reached
        reached |= frontier
    return bool(reached & target)


def is_acyclic(G: Digraph, X: int = None) -> bool:
    """True iff G[X] has no directed cycle (a digon counts as a 2-cycle)."""
    X = G.vertices if X is None else X
    G.check_set(X)
    left = X
    while left:
        sources = 0
        for v in members(left):
            if not (G.inn[v] & left):
                sources |= 1 << v
        if not sources:
            return False
        left &= ~sources
    return True


def colour_classes(phi: dict) -> dict:
    """colour -> bitmask of its class."""
    classes = {}
    for v, c in phi.items():
        classes[c] = classes.get(c, 0) | (1 << v)
    return classes


def is_valid_colouring(G: Digraph, phi: dict) -> bool:
    """Every colour class of the (possibly partial) colouring induces an acyclic subdigraph."""
    for v, c in phi.items():
        G.check_vertex(v)
        if not isinstance(c, int) or c < 1:
            raise ColouringError(f"colour {c!r} of vertex {v} is not a positive integer")
    return all(is_acyclic(G, m) for m in colour_classes(phi).values())


# ── exact search ──────────────────────────────
def _search_order(G: Digraph, X: int) -> list:
    """Fixed order: BFS over the underlying graph, highest degree first inside each component."""
    order, seen = [], 0
    pending = sorted(members(X), key=lambda v: (-G.degree(v), v))
    for root in pending:
        if seen >> root & 1:
            continue
        seen |= 1 << root
        queue = [root]
        while queue:
            v = queue.pop(0)
            order.append(v)
            nxt = members(G.neighbours(v) & X & ~seen)
            nxt.sort(key=lambda u: (-G.degree(u), u))
            for u in nxt:
                seen |= 1 << u
            queue.extend(nxt)
    return order


def _backtrack(G: Digraph, order: list, palette, lists=None, preset=None):
    """Yield every valid colouring of `order` (extending `preset`).

    palette=int m: colours 1..m with restricted growth (one colouring per partition).
    lists given: colours drawn from lists[v], no symmetry breaking.
    """
    preset = dict(preset or {})
    classes = colour_classes(preset)
    assign = dict(preset)
    used0 = max(preset.values(), default=0)

    def rec(i, used):
        if i == len(order):
            yield dict(assign)
            return
        v = order[i]
        if lists is None:
            cands = range(1, min(palette, used + 1) + 1)
        else:
            cands = lists[v]
        for c in cands:
            m = classes.get(c, 0)
            if m and _closes_cycle(G, m, v):
                continue
            classes[c] = m | (1 << v)
            assign[v] = c
            yield from rec(i + 1, max(used, c) if lists is None else used)
            classes[c] = m
            del assign[v]

    yield from rec(0, used0)


def k_dicolourable(G: Digraph, k: int):
    """A valid total colouring with colours in [k], or None when χ⃗(G) > k."""
    if k < 0:
        raise ParameterError("k must be >= 0")
    if G.n == 0:
        return {}
    if k == 0:
        return None
    return next(_backtrack(G, _search_order(G, G.vertices), k), None)


def dichromatic_number(G: Digraph):
    """(χ⃗(G), witness colouring). The empty digraph has χ⃗ = 0."""
    if G.n == 0:
        return 0, {}
    if is_acyclic(G):
        return 1, {v: 1 for v in range(G.n)}
    k = 2
    while True:
        phi = k_dicolourable(G, k)
        if phi is not None:
            return k, phi
        k += 1


def chi(G: Digraph) -> int:
    return dichromatic_number(G)[0]


def all_dicolourings(G: Digraph, X: int, m: int):
    """Every m-dicolouring of G[X], one per partition into classes (colours by first use)."""
    G.check_set(X)
    return _backtrack(G, sorted(members(X)), m)


# ── greedy extension ──────────────────────────
def greedy_colour(G: Digraph, phi: dict, v: int, k: int):
    """Smallest colour of [k] not appearing on both a coloured in- and out-neighbour of v."""
    ins = {phi[u] for u in members(G.inn[v]) if u in phi}
    outs = {phi[u] for u in members(G.out[v]) if u in phi}
    blocked = ins & outs
    for c in range(1, k + 1):
        if c not in blocked:
            return c
    return None


def greedy_extend(G: Digraph, phi: dict, order, k: int) -> dict:
    """Colour `order` greedily on top of phi; inextensible vertices stay uncoloured."""
    order = list(order)
    for v in order:
        G.check_vertex(v)
    if len(set(order)) != len(order):
        raise ColouringError("order repeats a vertex")
    if set(order) & set(phi):
        raise ColouringError("order overlaps the coloured vertices")
    if not is_valid_colouring(G, phi):
        raise ColouringError("phi is not a dicolouring of its domain")
    out = dict(phi)
    for v in order:
        c = greedy_colour(G, out, v, k)
        if c is not None:
            out[v] = c
    return out


# ── list dicolouring ──────────────────────────
def _check_lists(G: Digraph, L: dict) -> dict:
    missing = [v for v in range(G.n) if v not in L]
    if missing:
        raise ColouringError(f"no list for vertices {missing}")
    return {v: sorted(set(L[v])) for v in range(G.n)}


def list_dicolourable(G: Digraph, L: dict):
    """An L-dicolouring of G, or None when none exists (exhaustive)."""
    lists = _check_lists(G, L)
    order = sorted(range(G.n), key=lambda v: (len(lists[v]), -G.degree(v), v))
    return next(_backtrack(G, order, None, lists=lists), None)


def list_dicolourings(G: Digraph, L: dict, X: int = None):
    """Every L-dicolouring of G[X] (X defaults to V(G))."""
    lists = _check_lists(G, L)
    X = G.vertices if X is None else X
    return _backtrack(G, sorted(members(X)), None, lists=lists)


# ── shifting ──────────────────────────────────
def shift(G: Digraph, L: dict, phi: dict, x: int, y: int) -> dict:
    """Uncolour y and give x the old colour of y; the result must be an L-dicolouring of G−y."""
    G.check_vertex(x)
    G.check_vertex(y)
    if x in phi:
        raise ColouringError(f"vertex {x} is already coloured")
    if set(phi) != set(range(G.n)) - {x}:
        raise ColouringError(f"phi must colour exactly V(G) − {x}")
    if not (G.neighbours(x) >> y & 1):
        raise ColouringError(f"vertex {y} is not adjacent to {x}")
    out = dict(phi)
    out[x] = out.pop(y)
    if out[x] not in set(L.get(x, ())):
        raise HypothesisViolation(f"colour {out[x]} is not in L({x})", witness=out)
    if not is_valid_colouring(G, out):
        raise HypothesisViolation(f"shifting {y} -> {x} creates a monochromatic cycle",
                                  witness=out)
    return out


def _cycle_vertices(G: Digraph, C) -> list:
    """Vertex sequence of a weak cycle given as vertices or as alternating vertex/arc items."""
    seq = [e for e in C if not isinstance(e, tuple)]
    arcs = [e for e in C if isinstance(e, tuple)]
    if len(seq) > 1 and seq[0] == seq[-1]:
        seq = seq[:-1]
    if len(seq) < 2 or len(set(seq)) != len(seq):
        raise ParameterError("a weak cycle needs at least two distinct vertices")
    for i, v in enumerate(seq):
        u = seq[(i + 1) % len(seq)]
        G.check_vertex(v)
        if not (G.neighbours(v) >> u & 1):
            raise ParameterError(f"{v} and {u} are consecutive on the cycle but not adjacent")
    for a, b in arcs:
        if not G.has_arc(a, b):
            raise ParameterError(f"cycle arc ({a},{b}) is not in G")
    return seq


def shift_around_cycle(G: Digraph, L: dict, phi: dict, C, direction: str = "clockwise",
                       steps: int = 1) -> dict:
    """Compose `steps` single shifts around C; clockwise pulls the colour of the predecessor."""
    if direction not in ("clockwise", "counterclockwise"):
        raise ParameterError("direction must be clockwise or counterclockwise")
    if steps < 0:
        raise ParameterError("steps must be >= 0")
    seq = _cycle_vertices(G, C)
    holes = [v for v in seq if v not in phi]
    if len(holes) != 1:
        raise ColouringError("exactly one vertex of C must be uncoloured")
    i = seq.index(holes[0])
    step = -1 if direction == "clockwise" else 1
    cur = dict(phi)
    for _ in range(steps):
        j = (i + step) % len(seq)
        cur = shift(G, L, cur, seq[i], seq[j])
        i = j
    return cur


def uncoloured(G: Digraph, phi: dict) -> int:
    return G.vertices & ~vset(phi)
