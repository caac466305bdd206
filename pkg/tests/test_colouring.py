import pytest
from hypothesis import given, settings

from core.colouring import (all_dicolourings, chi, dichromatic_number, greedy_extend,
                            is_acyclic, is_valid_colouring, k_dicolourable, list_dicolourable,
                            list_dicolourings, shift, shift_around_cycle, uncoloured)
from core.digraph import Digraph
from core.families import (complete_symmetric, directed_cycle, directed_path,
                           symmetric_cycle)
from core.utils import ColouringError, HypothesisViolation, ParameterError, members, vset
from tests.strategies import brute_chi, digraphs


# ── acyclicity ────────────────────────────────
def test_digon_is_a_cycle():
    assert not is_acyclic(complete_symmetric(2))
    assert is_acyclic(directed_path(4))
    assert is_acyclic(directed_cycle(4), vset([0, 1, 2]))


def test_invalid_colour_values():
    with pytest.raises(ColouringError):
        is_valid_colouring(directed_cycle(3), {0: 0})


# ── exact χ⃗ ───────────────────────────────────
@pytest.mark.parametrize("G, expected", [
    (Digraph.empty(0), 0),
    (Digraph.empty(3), 1),
    (directed_path(5), 1),
    (directed_cycle(5), 2),
    (complete_symmetric(4), 4),
    (symmetric_cycle(4), 2),
    (symmetric_cycle(5), 3),
])
def test_chi_of_standard_digraphs(G, expected):
    assert chi(G) == expected


@settings(max_examples=60, deadline=None)
@given(digraphs(max_n=5))
def test_chi_matches_brute_force(G):
    value, phi = dichromatic_number(G)
    assert value == brute_chi(G)
    assert set(phi) == set(range(G.n))
    assert is_valid_colouring(G, phi)
    assert len(set(phi.values())) <= value


@settings(max_examples=40, deadline=None)
@given(digraphs(min_n=1, max_n=5))
def test_k_dicolourable_threshold(G):
    c = chi(G)
    assert k_dicolourable(G, c) is not None
    assert k_dicolourable(G, c - 1) is None


def test_all_dicolourings_one_per_partition():
    # partitions of three points into at most two blocks: 1 + 3
    assert len(list(all_dicolourings(Digraph.empty(3), vset([0, 1, 2]), 2))) == 4
    # a digon forces distinct colours
    assert len(list(all_dicolourings(complete_symmetric(2), 0b11, 2))) == 1


# ── greedy extension ──────────────────────────
def test_greedy_extend_blocks_colours_on_both_sides():
    G = directed_cycle(3)
    assert greedy_extend(G, {0: 1, 1: 1}, [2], 1) == {0: 1, 1: 1}
    assert greedy_extend(G, {0: 1, 1: 1}, [2], 2) == {0: 1, 1: 1, 2: 2}


def test_greedy_extend_errors():
    G = directed_cycle(3)
    with pytest.raises(ColouringError):
        greedy_extend(G, {0: 1}, [0], 2)
    with pytest.raises(ColouringError):
        greedy_extend(G, {}, [1, 1], 2)
    with pytest.raises(ColouringError):
        greedy_extend(complete_symmetric(2), {0: 1, 1: 1}, [], 2)


def test_uncoloured():
    assert members(uncoloured(directed_cycle(4), {0: 1, 2: 1})) == [1, 3]


# ── list dicolouring ──────────────────────────
def test_list_dicolourable():
    G = directed_cycle(3)
    assert list_dicolourable(G, {0: [1], 1: [1], 2: [1]}) is None
    assert list_dicolourable(G, {0: [1], 1: [1], 2: [2]}) == {0: 1, 1: 1, 2: 2}
    with pytest.raises(ColouringError):
        list_dicolourable(G, {0: [1]})


def test_list_dicolourings_enumerates_all():
    G = complete_symmetric(2)
    found = list(list_dicolourings(G, {0: [1, 2], 1: [1, 2]}))
    assert sorted(tuple(sorted(p.items())) for p in found) == [((0, 1), (1, 2)), ((0, 2), (1, 1))]


# ── shifting ──────────────────────────────────
def test_shift_moves_colour_and_uncolours():
    G = directed_path(3)
    L = {v: [1, 2] for v in range(3)}
    assert shift(G, L, {1: 2, 2: 1}, 0, 1) == {0: 2, 2: 1}


def test_shift_errors():
    G = directed_path(3)
    L = {0: [1], 1: [1, 2], 2: [1, 2]}
    with pytest.raises(ColouringError):
        shift(G, L, {0: 1, 2: 1}, 0, 1)
    with pytest.raises(ColouringError):
        shift(G, L, {1: 2, 2: 1}, 0, 2)
    with pytest.raises(HypothesisViolation):
        shift(G, L, {1: 2, 2: 1}, 0, 1)


def test_shift_creating_monochromatic_cycle():
    G = Digraph.from_arcs(4, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 0)])
    L = {v: [1, 2] for v in range(4)}
    with pytest.raises(HypothesisViolation) as exc:
        shift(G, L, {1: 1, 2: 1, 3: 1}, 0, 3)
    assert exc.value.witness == {0: 1, 1: 1, 2: 1}


def test_shift_around_weak_cycle_trace():
    G = Digraph.from_arcs(5, [(1, 0), (4, 0), (4, 3), (3, 2), (1, 2)])
    L = {v: [1, 2, 3] for v in range(5)}
    phi = {1: 1, 2: 2, 3: 1, 4: 3}
    one = shift_around_cycle(G, L, phi, [0, 1, 2, 3, 4])
    assert one == {0: 3, 1: 1, 2: 2, 3: 1}
    five = shift_around_cycle(G, L, phi, [0, 1, 2, 3, 4], steps=5)
    assert five == {1: 3, 2: 1, 3: 2, 4: 1}
    back = shift_around_cycle(G, L, five, [0, 1, 2, 3, 4], "counterclockwise", 5)
    assert back == phi


def test_shift_around_cycle_accepts_alternating_sequences():
    G = directed_cycle(3)
    L = {v: [1, 2] for v in range(3)}
    seq = [0, (0, 1), 1, (1, 2), 2, (2, 0), 0]
    assert shift_around_cycle(G, L, {1: 1, 2: 2}, seq) == shift_around_cycle(
        G, L, {1: 1, 2: 2}, [0, 1, 2])


def test_shift_around_cycle_errors():
    G = directed_cycle(3)
    L = {v: [1, 2] for v in range(3)}
    with pytest.raises(ParameterError):
        shift_around_cycle(G, L, {1: 1, 2: 2}, [0, 1, 2], direction="sideways")
    with pytest.raises(ColouringError):
        shift_around_cycle(G, L, {2: 2}, [0, 1, 2])
    with pytest.raises(ParameterError):
        shift_around_cycle(directed_path(3), L, {1: 1, 2: 2}, [0, 2, 1])
