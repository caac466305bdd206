import pytest

from core.digraph import Digraph
from core.families import complete_symmetric, directed_cycle
from core.formats import (from_digraph6, from_edgelist, parse_digraph, parse_digraphs,
                          read_digraphs, to_digraph6, to_edgelist, write_digraph)
from core.utils import FormatError, ParameterError
from scanner.census_engine import enumerate_digraphs


# ── digraph6 ──────────────────────────────────
def test_known_encodings():
    assert to_digraph6(complete_symmetric(2)) == "&AW"
    assert to_digraph6(Digraph.from_arcs(2, [(0, 1)])) == "&AO"
    assert from_digraph6("&AW") == complete_symmetric(2)
    assert from_digraph6("&AO").arcs() == [(0, 1)]


def test_round_trip_on_four_vertices(cfg):
    census = enumerate_digraphs(4, cfg=cfg)
    assert len(census) == 218
    assert all(from_digraph6(to_digraph6(G)) == G for G in census)


@pytest.mark.parametrize("text", [
    "AW",              # missing '&'
    "&",               # missing order
    "&A" + chr(200),   # character out of range
    "&AWW",            # trailing garbage
    "&B",              # body too short
    "&AX",             # padding bit set
    "&@_",             # loop on a single vertex
])
def test_digraph6_errors(text):
    with pytest.raises(FormatError):
        from_digraph6(text)


# ── edge list ─────────────────────────────────
def test_edgelist_round_trip_is_sorted():
    G = Digraph.from_arcs(3, [(2, 0), (0, 1), (1, 2)])
    text = to_edgelist(G)
    assert text == "3 3\n0 1\n1 2\n2 0\n"
    assert from_edgelist(text) == G


def test_edgelist_comments_and_blank_lines():
    G = from_edgelist("# a triangle\n3 3\n0 1\n\n1 2  # back\n2 0\n")
    assert G == directed_cycle(3)


@pytest.mark.parametrize("text", [
    "",
    "3\n",
    "2 1\n0 0\n",
    "2 1\n0 2\n",
    "2 2\n0 1\n",
    "2 2\n0 1\n0 1\n",
    "2 1\n0 x\n",
])
def test_edgelist_errors(text):
    with pytest.raises(FormatError):
        from_edgelist(text)


# ── dispatch ──────────────────────────────────
def test_parse_dispatch():
    assert parse_digraph("&AW") == complete_symmetric(2)
    assert parse_digraph("2 1\n0 1\n") == Digraph.from_arcs(2, [(0, 1)])
    assert parse_digraphs("&AW\n&AO\n") == [complete_symmetric(2), Digraph.from_arcs(2, [(0, 1)])]
    with pytest.raises(FormatError):
        parse_digraph("&AW\n&AO")


def test_write_digraph_formats():
    G = directed_cycle(3)
    assert write_digraph(G) == to_digraph6(G)
    assert write_digraph(G, "edgelist") == to_edgelist(G)
    with pytest.raises(ParameterError):
        write_digraph(G, "dot")


def test_read_digraphs_from_file(tmp_path):
    path = tmp_path / "graphs.d6"
    path.write_text("&AW\n&AO\n")
    assert len(read_digraphs(path)) == 2
