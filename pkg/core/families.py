"""families.py — Named digraphs and extremal families, their text syntax and membership tests.

Spec syntax: `name(arg, ..., key=value)`. Arguments are ints, arcs written `u-v`, or
nested specs (for `join` and `hajos`), e.g. `Dk(k=4,n=1)`, `wheel(0,2,2)`,
`hajos(K(3),K(3),a1=0-1,a2=1-2)`.
"""
import re
from dataclasses import dataclass, field
from functools import lru_cache

from core.canon import canonical_form
from core.digraph import Digraph, dirac_join, substitute
from core.utils import ParameterError


# ── basic digraphs ────────────────────────────
def complete_symmetric(n: int) -> Digraph:
    if n < 0:
        raise ParameterError("↔K_n needs n >= 0")
    return Digraph.from_arcs(n, [(u, v) for u in range(n) for v in range(n) if u != v])


def directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise ParameterError("C⃗_n needs n >= 2")
    return Digraph.from_arcs(n, [(i, (i + 1) % n) for i in range(n)])


def symmetric_cycle(n: int) -> Digraph:
    if n < 2:
        raise ParameterError("↔C_n needs n >= 2")
    arcs = {(i, (i + 1) % n) for i in range(n)} | {((i + 1) % n, i) for i in range(n)}
    return Digraph.from_arcs(n, sorted(arcs))


def directed_path(n: int) -> Digraph:
    if n < 1:
        raise ParameterError("P⃗_n needs n >= 1")
    return Digraph.from_arcs(n, [(i, i + 1) for i in range(n - 1)])


def symmetric_path(n: int) -> Digraph:
    if n < 1:
        raise ParameterError("↔P_n needs n >= 1")
    return Digraph.from_arcs(n, [a for i in range(n - 1) for a in ((i, i + 1), (i + 1, i))])


# ── order construction, D_k, F_k ──────────────
def order_construction(k: int, n: int) -> Digraph:
    """k-dicritical digraph on n vertices: ↔K_2(↔K_{k−2}, C⃗_{n+2−k}), or ↔K_k when n = k."""
    if k < 2 or n < k:
        raise ParameterError(f"order construction needs n >= k >= 2 (got k={k}, n={n})")
    if n == k:
        return complete_symmetric(k)
    return dirac_join(complete_symmetric(k - 2), directed_cycle(n + 2 - k))


def gen_Dk(k: int, n: int) -> Digraph:
    """↔C_5(↔K_{k−2}, ↔K_1, ↔K_n, ↔K_{k−1−n}, ↔K_1)."""
    if k < 4 or not 1 <= n <= k - 2:
        raise ParameterError(f"D_k needs k >= 4 and 1 <= n <= k−2 (got k={k}, n={n})")
    sizes = (k - 2, 1, n, k - 1 - n, 1)
    return substitute(symmetric_cycle(5), [complete_symmetric(s) for s in sizes])


def gen_Fk(k: int, a1: int, a2: int, b1: int, b2: int) -> Digraph:
    """↔C_5(↔K_1, ↔K_{a1}, ↔K_{a2}, ↔K_{b2}, ↔K_{b1})."""
    if k < 4:
        raise ParameterError("F_k needs k >= 4")
    if min(a1, a2, b1, b2) < 1:
        raise ParameterError("F_k parts must be nonempty")
    if a1 + a2 != k - 1 or b1 + b2 != k - 1 or a2 + b2 != k - 1:
        raise ParameterError("F_k needs a1+a2 = b1+b2 = a2+b2 = k−1")
    sizes = (1, a1, a2, b2, b1)
    return substitute(symmetric_cycle(5), [complete_symmetric(s) for s in sizes])


def is_in_Dk(G: Digraph, k: int) -> bool:
    if k < 4 or G.n != 2 * k - 1 or not G.is_symmetric():
        return False
    form = canonical_form(G, max_n=max(G.n, 9))
    return any(canonical_form(gen_Dk(k, n), max_n=G.n) == form for n in range(1, k - 1))


# ── D'_3 ──────────────────────────────────────
def extended_wheel(la: int, lb: int, lc: int, reverse: bool = False) -> Digraph:
    """Hub 0, directed triangle a→b→c→a (a→c→b→a when reverse), symmetric hub paths.

    A path of length 0 identifies the hub with that triangle vertex.
    """
    lengths = (la, lb, lc)
    if min(lengths) < 0:
        raise ParameterError("path lengths must be >= 0")
    if len({l % 2 for l in lengths}) != 1:
        raise ParameterError("path lengths must share parity")
    if lengths.count(0) > 1:
        raise ParameterError("at most one path length may be 0")
    arcs, n, ends = [], 1, []
    for l in lengths:
        prev = 0
        for _ in range(l):
            arcs += [(prev, n), (n, prev)]
            prev, n = n, n + 1
        ends.append(prev)
    a, b, c = ends
    tri = [(a, c), (c, b), (b, a)] if reverse else [(a, b), (b, c), (c, a)]
    return Digraph.from_arcs(n, arcs + tri)


# z=0, x=1, y=2, u=3, w=4; digons x–z, z–y, u–w
FIG3_ARCS = [(1, 0), (2, 0), (0, 1), (0, 2), (2, 4), (2, 3), (4, 3), (4, 1), (3, 1), (1, 2), (3, 4)]
FIG3_DIGONS = [(1, 0), (0, 2), (3, 4)]


def gen_D3prime_fig3(l_xz: int = 1, l_zy: int = 1, l_uw: int = 1) -> Digraph:
    """The 5-vertex D'_3 digraph with each digon replaced by an odd symmetric path."""
    lengths = (l_xz, l_zy, l_uw)
    if any(l < 1 or l % 2 == 0 for l in lengths):
        raise ParameterError("digon replacements must be odd lengths >= 1")
    digons = {frozenset(d) for d in FIG3_DIGONS}
    arcs = [a for a in FIG3_ARCS if frozenset(a) not in digons]
    n = 5
    for (p, q), l in zip(FIG3_DIGONS, lengths):
        chain = [p] + list(range(n, n + l - 1)) + [q]
        n += l - 1
        for s, t in zip(chain, chain[1:]):
            arcs += [(s, t), (t, s)]
    return Digraph.from_arcs(n, arcs)


def d3prime_members(n: int):
    """Every generated D'_3 digraph on n vertices (with repeats up to isomorphism)."""
    for la in range(n):
        for lb in range(n - la):
            lc = n - 1 - la - lb
            try:
                yield extended_wheel(la, lb, lc)
            except ParameterError:
                continue
    extra = n - 5
    if extra >= 0 and extra % 2 == 0:
        for e1 in range(0, extra + 1, 2):
            for e2 in range(0, extra - e1 + 1, 2):
                yield gen_D3prime_fig3(e1 + 1, e2 + 1, extra - e1 - e2 + 1)


@lru_cache(maxsize=None)
def _d3prime_forms(n: int, max_n: int) -> frozenset:
    return frozenset(canonical_form(G, max_n) for G in d3prime_members(n))


def is_in_D3prime(G: Digraph, max_n: int = 9) -> bool:
    if G.n < 4:
        return False
    return canonical_form(G, max_n) in _d3prime_forms(G.n, max_n)


# ── Hajós join ────────────────────────────────
def hajos_join(G1: Digraph, a1, G2: Digraph, a2) -> Digraph:
    """Delete (u,v) from G1 and (x,y) from G2, identify u with y, add (x,v).

    G1 keeps its ids; G2's vertices follow at n1.., skipping y.
    """
    u, v = a1
    x, y = a2
    if not (0 <= u < G1.n and 0 <= v < G1.n and G1.has_arc(u, v)):
        raise ParameterError(f"arc ({u},{v}) not in G1")
    if not (0 <= x < G2.n and 0 <= y < G2.n and G2.has_arc(x, y)):
        raise ParameterError(f"arc ({x},{y}) not in G2")

    def place(w):
        if w == y:
            return u
        return G1.n + w - (1 if w > y else 0)

    arcs = [a for a in G1.arcs() if a != (u, v)]
    arcs += [(place(s), place(t)) for s, t in G2.arcs() if (s, t) != (x, y)]
    arcs.append((place(x), v))
    if len(set(arcs)) != len(arcs) or any(s == t for s, t in arcs):
        raise ParameterError("identification creates a loop or a parallel arc")
    H = Digraph.from_arcs(G1.n + G2.n - 1, arcs)
    if H.arc_count != G1.arc_count + G2.arc_count - 1:
        raise ParameterError("Hajós join arc count contract violated")
    return H


# ── spec syntax ───────────────────────────────
def _arc(value):
    if isinstance(value, tuple):
        return value
    raise ParameterError(f"expected an arc u-v, got {value!r}")


def _graph(value):
    if isinstance(value, FamilySpec):
        return value.build()
    raise ParameterError(f"expected a nested family spec, got {value!r}")


def _build_hajos(G1, G2, a1=None, a2=None):
    G1, G2 = _graph(G1), _graph(G2)
    a1 = _arc(a1) if a1 is not None else G1.arcs()[0]
    a2 = _arc(a2) if a2 is not None else G2.arcs()[0]
    return hajos_join(G1, a1, G2, a2)


# id -> (aliases, parameter names, builder)
FAMILIES = {
    "CompleteSym":           (("K",),        ("n",),                    complete_symmetric),
    "DirCycle":              (("C",),        ("n",),                    directed_cycle),
    "SymCycle":              (("SC",),       ("n",),                    symmetric_cycle),
    "DirPath":               (("P",),        ("n",),                    directed_path),
    "SymPath":               (("SP",),       ("n",),                    symmetric_path),
    "OrderConstruction":     (("order",),    ("k", "n"),                order_construction),
    "Dk":                    ((),            ("k", "n"),                gen_Dk),
    "D3Prime_ExtendedWheel": (("wheel",),    ("la", "lb", "lc", "reverse"), extended_wheel),
    "D3Prime_Fig3":          (("fig3",),     ("l_xz", "l_zy", "l_uw"),  gen_D3prime_fig3),
    "Fk":                    ((),            ("k", "a1", "a2", "b1", "b2"), gen_Fk),
    "DiracJoin":             (("join",),     ("G1", "G2"),
                              lambda G1, G2: dirac_join(_graph(G1), _graph(G2))),
    "HajosJoin":             (("hajos",),    ("G1", "G2", "a1", "a2"),  _build_hajos),
}

_ALIASES = {alias.lower(): fid for fid, (aliases, _, _) in FAMILIES.items()
            for alias in aliases + (fid,)}

_TOKEN = re.compile(r"\s*(?:(\d+-\d+)|(-?\d+)|([A-Za-z_][A-Za-z_0-9']*)|(.))")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    args:   tuple = ()
    kwargs: dict = field(default_factory=dict)

    def build(self) -> Digraph:
        _, names, builder = FAMILIES[self.family]
        if len(self.args) > len(names):
            raise ParameterError(f"{self.family} takes at most {len(names)} arguments")
        params = dict(zip(names, self.args))
        for key, value in self.kwargs.items():
            if key not in names:
                raise ParameterError(f"{self.family} has no parameter {key!r}")
            if key in params:
                raise ParameterError(f"{self.family}: {key} given twice")
            params[key] = value
        return builder(**params)

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        tokens = [t for t in _tokenize(text)]
        spec, pos = _parse_spec(tokens, 0)
        if pos != len(tokens):
            raise ParameterError(f"trailing input in family spec {text!r}")
        return spec


def _tokenize(text):
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        arc, num, name, sym = m.groups()
        if arc:
            s, t = arc.split("-")
            yield ("arc", (int(s), int(t)))
        elif num:
            yield ("int", int(num))
        elif name:
            yield ("name", name)
        elif sym and not sym.isspace():
            yield ("sym", sym)
        pos = m.end()


def _parse_spec(tokens, pos):
    if pos >= len(tokens) or tokens[pos][0] != "name":
        raise ParameterError("family spec must start with a family name")
    name = tokens[pos][1]
    fid = _ALIASES.get(name.lower())
    if fid is None:
        raise ParameterError(f"unknown family {name!r}; known: {sorted(FAMILIES)}")
    pos += 1
    args, kwargs = [], {}
    if pos < len(tokens) and tokens[pos] == ("sym", "("):
        pos += 1
        while pos < len(tokens) and tokens[pos] != ("sym", ")"):
            key = None
            if (tokens[pos][0] == "name" and pos + 1 < len(tokens)
                    and tokens[pos + 1] == ("sym", "=")):
                key = tokens[pos][1]
                pos += 2
            value, pos = _parse_value(tokens, pos)
            if key is None:
                if kwargs:
                    raise ParameterError("positional argument after keyword argument")
                args.append(value)
            else:
                kwargs[key] = value
            if pos < len(tokens) and tokens[pos] == ("sym", ","):
                pos += 1
        if pos >= len(tokens):
            raise ParameterError("unclosed '(' in family spec")
        pos += 1
    return FamilySpec(fid, tuple(args), kwargs), pos


def _parse_value(tokens, pos):
    if pos >= len(tokens):
        raise ParameterError("missing value in family spec")
    kind, value = tokens[pos]
    if kind in ("int", "arc"):
        return value, pos + 1
    if kind == "name" and value.lower() in ("true", "false"):
        return value.lower() == "true", pos + 1
    if kind == "name":
        return _parse_spec(tokens, pos)
    raise ParameterError(f"unexpected {value!r} in family spec")


def gen_family(text: str) -> Digraph:
    return FamilySpec.parse(text).build()
