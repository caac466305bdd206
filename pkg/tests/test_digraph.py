from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.canon import is_isomorphic
from core.digraph import (Digraph, contract, default_eps, degrees, dirac_join, excess,
                          neighborhood_profile, potential, substitute, y_construction)
from core.families import (FIG3_ARCS, complete_symmetric, directed_cycle, gen_Dk,
                           symmetric_cycle)
from core.utils import ColouringError, ParameterError, VertexRangeError, members, vset
from tests.strategies import digraphs


# ── model ─────────────────────────────────────
@given(digraphs())
def test_reverse_twice_is_identity(G):
    assert G.reverse().reverse() == G


@given(digraphs())
def test_arc_count_bounds(G):
    assert 0 <= G.arc_count <= G.n * (G.n - 1)
    assert G.arc_count == int(G.matrix().sum())
    assert not G.matrix().diagonal().any()


def test_loops_and_range_rejected():
    with pytest.raises(ParameterError):
        Digraph.from_arcs(2, [(1, 1)])
    with pytest.raises(VertexRangeError):
        Digraph.from_arcs(2, [(0, 2)])
    with pytest.raises(ParameterError):
        Digraph.from_matrix([[1, 0], [0, 0]])


def test_from_matrix_matches_arcs():
    G = Digraph.from_matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    assert G == directed_cycle(3)


def test_induced_relabels_in_order():
    G = directed_cycle(4)
    H = G.induced(vset([1, 2, 3]))
    assert H.arcs() == [(0, 1), (1, 2)]


# ── neighbourhoods and degrees ───────────────
def test_profile_complete_symmetric():
    p = neighborhood_profile(complete_symmetric(3), 0)
    assert members(p.nplus) == members(p.nminus) == members(p.nd) == [1, 2]
    assert p.ns == 0


def test_profile_directed_cycle():
    p = neighborhood_profile(directed_cycle(3), 0)
    assert members(p.nplus) == [1]
    assert members(p.nminus) == [2]
    assert p.nd == 0


def test_profile_fig3_vertex_y():
    # z=0, x=1, y=2, u=3, w=4
    G = Digraph.from_arcs(5, FIG3_ARCS)
    p = neighborhood_profile(G, 2)
    assert members(p.nplus) == [0, 3, 4]
    assert members(p.nminus) == [0, 1]
    assert members(p.nd) == [0]
    assert members(p.ns_plus) == [3, 4]
    assert members(p.ns_minus) == [1]
    d = degrees(G, 2)
    assert (d.d, d.d_max, d.d_min) == (5, 3, 2)


def test_degrees_of_standard_digraphs():
    d = degrees(complete_symmetric(4), 2)
    assert (d.d_plus, d.d_minus, d.d) == (3, 3, 6)
    d = degrees(directed_cycle(5), 4)
    assert (d.d_plus, d.d_minus, d.d) == (1, 1, 2)


def test_vertex_out_of_range():
    with pytest.raises(VertexRangeError):
        degrees(directed_cycle(3), 3)
    with pytest.raises(VertexRangeError):
        neighborhood_profile(directed_cycle(3), -1)


# ── excess and potential ─────────────────────
@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_excess_of_complete_is_zero(k):
    assert excess(complete_symmetric(k), k) == 0


def test_excess_of_Dk_member():
    assert excess(gen_Dk(4, 1), 4) == 2


def test_excess_of_dirac_bound_tightness_example():
    G = dirac_join(complete_symmetric(2), directed_cycle(3))
    assert (G.n, G.arc_count) == (5, 17)
    assert excess(G, 4) == 4


@given(digraphs(min_n=1), st.integers(2, 5), st.data())
def test_excess_is_additive(G, k, data):
    X = data.draw(st.integers(0, G.vertices))
    assert excess(G, k, X) + excess(G, k, G.vertices & ~X) == excess(G, k)
    assert excess(G, k) == 2 * G.arc_count - 2 * (k - 1) * G.n


@pytest.mark.parametrize("k", [4, 5, 6, 9])
def test_potential_of_small_cliques(k):
    eps = default_eps(k)
    assert potential(complete_symmetric(1), k) == k - 1 + eps
    assert potential(complete_symmetric(k), k) == k * eps
    assert potential(complete_symmetric(k - 1), k) == (k - 1) * (1 + eps)


def test_potential_is_exact():
    assert isinstance(potential(complete_symmetric(3), 5), Fraction)
    assert potential(complete_symmetric(1), 5, Fraction(1, 8)) == Fraction(33, 8)


def test_potential_rejects_bad_parameters():
    with pytest.raises(ParameterError):
        potential(complete_symmetric(2), 3)
    with pytest.raises(ParameterError):
        potential(complete_symmetric(2), 5, Fraction(1, 2))
    with pytest.raises(ParameterError):
        potential(complete_symmetric(2), 5, 0)


# ── contraction and joins ─────────────────────
def test_contract_consecutive_cycle_vertices():
    H, proj = contract(directed_cycle(4), [vset([0, 1])])
    assert is_isomorphic(H, directed_cycle(3))
    assert proj[0] == proj[1] == 2


def test_contract_symmetric_cycle():
    H, _ = contract(symmetric_cycle(5), [[0, 1]])
    assert is_isomorphic(H, symmetric_cycle(4))


def test_contract_rejects_overlap_and_empty():
    with pytest.raises(ParameterError):
        contract(directed_cycle(4), [vset([0, 1]), vset([1, 2])])
    with pytest.raises(ParameterError):
        contract(directed_cycle(4), [0])


def test_y_construction_joins_classes_by_digons():
    G = directed_cycle(4)
    Y = y_construction(G, vset([0, 1, 2]), {0: 1, 1: 1, 2: 2})
    # vertex 3 untouched, classes {0,1} and {2} become ids 1 and 2
    assert Y.n == 3
    assert Y.has_arc(1, 2) and Y.has_arc(2, 1)


def test_y_construction_needs_a_dicolouring():
    with pytest.raises(ColouringError):
        y_construction(directed_cycle(3), vset([0, 1, 2]), {0: 1, 1: 1, 2: 1})
    with pytest.raises(ColouringError):
        y_construction(directed_cycle(3), vset([0, 1]), {0: 1})


def test_dirac_join_counts():
    G1, G2 = complete_symmetric(2), directed_cycle(3)
    J = dirac_join(G1, G2)
    assert J.n == 5
    assert J.arc_count == G1.arc_count + G2.arc_count + 2 * G1.n * G2.n


def test_substitute_blows_up_vertices():
    H = substitute(directed_cycle(3), [complete_symmetric(2), complete_symmetric(1),
                                       complete_symmetric(1)])
    assert H.n == 4
    # inner digon, 2 arcs to vertex 1's copy, 1 arc onward, 2 arcs back into the pair
    assert H.arc_count == 2 + 2 + 1 + 2
    with pytest.raises(ParameterError):
        substitute(directed_cycle(3), [complete_symmetric(1)])


@settings(max_examples=50)
@given(digraphs(max_n=4))
def test_disjoint_union_and_delete(G):
    U = G.disjoint_union(G)
    assert U.arc_count == 2 * G.arc_count
    assert U.delete_vertices(U.vertices & ~G.vertices) == G
