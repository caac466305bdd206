"""formats.py — digraph6 and edge-list readers/writers.

digraph6: '&', one order character (n+63, n <= 62), then the full row-major n×n adjacency
matrix in 6-bit groups, most significant bit first, each group written as value+63.
Edge list: a header line `n m`, then m lines `u v` (0-based).
"""
import sys
from pathlib import Path

import numpy as np

from core.digraph import Digraph
from core.utils import FormatError, ParameterError

D6_MAX_N = 62
_WEIGHTS = np.array([32, 16, 8, 4, 2, 1], dtype=np.int64)


# ── digraph6 ──────────────────────────────────
def to_digraph6(G: Digraph) -> str:
    if G.n > D6_MAX_N:
        raise FormatError(f"digraph6 order > {D6_MAX_N} is not supported")
    bits = G.matrix().flatten().astype(np.int64)
    pad = -len(bits) % 6
    bits = np.concatenate([bits, np.zeros(pad, dtype=np.int64)])
    groups = bits.reshape(-1, 6) @ _WEIGHTS if len(bits) else np.zeros(0, dtype=np.int64)
    return "&" + chr(G.n + 63) + "".join(chr(int(g) + 63) for g in groups)


def from_digraph6(text: str) -> Digraph:
    s = text.strip()
    if not s.startswith("&") or len(s) < 2:
        raise FormatError(f"digraph6 must start with '&' and an order character: {s[:10]!r}")
    codes = [ord(ch) - 63 for ch in s[1:]]
    if any(not 0 <= c <= 63 for c in codes):
        raise FormatError("digraph6 character outside the range 63..126")
    n = codes[0]
    if n > D6_MAX_N:
        raise FormatError(f"digraph6 order > {D6_MAX_N} (multi-byte header) is not supported")
    need = -(-n * n // 6)
    body = codes[1:]
    if len(body) != need:
        raise FormatError(f"digraph6 body has {len(body)} characters, expected {need}")
    bits = ((np.array(body, dtype=np.int64)[:, None] & _WEIGHTS) > 0).flatten()
    if bits[n * n:].any():
        raise FormatError("digraph6 padding bits must be zero")
    adj = bits[: n * n].reshape(n, n)
    if n and adj.diagonal().any():
        raise FormatError("digraph6 encodes a loop")
    return Digraph.from_matrix(adj)


# ── edge list ─────────────────────────────────
def to_edgelist(G: Digraph) -> str:
    lines = [f"{G.n} {G.arc_count}"] + [f"{u} {v}" for u, v in G.arcs()]
    return "\n".join(lines) + "\n"


def _ints(line: str, lineno: int) -> list:
    try:
        return [int(t) for t in line.split()]
    except ValueError:
        raise FormatError(f"line {lineno}: expected integers, got {line!r}")


def from_edgelist(text: str) -> Digraph:
    lines = [(i + 1, l.split("#", 1)[0].strip()) for i, l in enumerate(text.splitlines())]
    lines = [(i, l) for i, l in lines if l]
    if not lines:
        raise FormatError("empty edge list")
    head = _ints(lines[0][1], lines[0][0])
    if len(head) != 2 or min(head) < 0:
        raise FormatError("edge-list header must be `n m` with n, m >= 0")
    n, m = head
    arcs = []
    for lineno, line in lines[1:]:
        pair = _ints(line, lineno)
        if len(pair) != 2:
            raise FormatError(f"line {lineno}: expected `u v`")
        u, v = pair
        if u == v:
            raise FormatError(f"line {lineno}: loop arc at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {lineno}: arc ({u},{v}) out of range for n={n}")
        arcs.append((u, v))
    if len(arcs) != m:
        raise FormatError(f"header announces {m} arcs, found {len(arcs)}")
    if len(set(arcs)) != len(arcs):
        raise FormatError("edge list repeats an arc")
    return Digraph.from_arcs(n, arcs)


# ── dispatch ──────────────────────────────────
def parse_digraph(text: str) -> Digraph:
    s = text.strip()
    if s.startswith("&"):
        if "\n" in s:
            raise FormatError("expected a single digraph6 line")
        return from_digraph6(s)
    return from_edgelist(s)


def parse_digraphs(text: str) -> list:
    """A digraph6 stream (one per line) or a single edge list."""
    s = text.strip()
    if s.startswith("&"):
        return [from_digraph6(l) for l in s.splitlines() if l.strip()]
    return [from_edgelist(s)]


def write_digraph(G: Digraph, fmt: str = "digraph6") -> str:
    if fmt == "digraph6":
        return to_digraph6(G)
    if fmt == "edgelist":
        return to_edgelist(G)
    raise ParameterError(f"unknown format {fmt!r} (digraph6 | edgelist)")


def read_digraphs(path) -> list:
    """Read a file, or stdin when path is '-'."""
    if str(path) == "-":
        return parse_digraphs(sys.stdin.read())
    return parse_digraphs(Path(path).read_text())
