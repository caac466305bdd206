import json
from dataclasses import replace
from fractions import Fraction

import pytest

from core.colouring import list_dicolourable
from core.digraph import degrees
from core.families import complete_symmetric, directed_cycle
from core.utils import BudgetExceeded, ParameterError, dumps, members, vset
from theorems.bounds_engine import ky_lower
from theorems.list_engine import (SHIFT_EXAMPLE_ARCS, SHIFT_EXAMPLE_PANELS, SHIFT_EXAMPLE_START,
                                  _random_lists, all_bipartite, list_facts, random_bipartite,
                                  shift_trace, spread_condition, two_forest_bruteforce)
from theorems.registry import THEOREMS, describe, verify_theorem
from theorems.report import Probe
from theorems.instances import random_connected_subset, random_digraph, rng_for
from theorems.structure_engine import brooks_extremal, is_symmetric_odd_cycle
from core.digraph import Digraph


# ── report and probe ──────────────────────────
def test_report_schema_and_violation_order():
    probe = Probe("demo", {"k": 3}, seed=7, budget_seconds=60)
    probe.check(directed_cycle(3), False, {"why": "b"})
    probe.check(complete_symmetric(2), True, {})
    probe.check(complete_symmetric(3), False, {"why": "a"})
    probe.check(None, False, "no digraph")
    report = probe.finish()
    d = report.to_dict()
    assert set(d) >= {"theorem", "params", "instances_checked", "violations", "seed",
                      "elapsed_ms"}
    assert d["instances_checked"] == 4
    codes = [v["digraph6"] for v in d["violations"]]
    assert codes == sorted(codes)
    assert "-" in codes
    assert not report.ok
    json.loads(dumps(d))


def test_probe_provenance_only_weakens():
    probe = Probe("demo", {}, seed=1, budget_seconds=60)
    probe.provenance("random")
    probe.provenance("family")
    assert probe.report.provenance == "random"
    probe.provenance("pruned")
    assert probe.report.provenance == "pruned"


def test_probe_budget():
    probe = Probe("demo", {}, seed=1, budget_seconds=-1)
    with pytest.raises(BudgetExceeded):
        probe.tick()


# ── helpers ───────────────────────────────────
def test_ky_lower_is_exact():
    assert ky_lower(5, 5) == 20
    assert ky_lower(4, 4) == complete_symmetric(4).arc_count
    assert ky_lower(5, 6) == Fraction(17, 4) * 6 - 5 * Fraction(1, 4)


def test_brooks_extremal_classes():
    assert brooks_extremal(complete_symmetric(1))
    assert brooks_extremal(complete_symmetric(2))
    assert brooks_extremal(directed_cycle(4))
    assert brooks_extremal(complete_symmetric(4))
    assert not brooks_extremal(Digraph.from_arcs(2, [(0, 1)]))
    assert not is_symmetric_odd_cycle(complete_symmetric(4))


def test_seeded_instances_are_reproducible():
    a = random_digraph(rng_for(5), 6)
    b = random_digraph(rng_for(5), 6)
    assert a == b
    X = random_connected_subset(rng_for(3), a, 3)
    assert X == random_connected_subset(rng_for(3), a, 3)


def test_shift_trace_panels():
    G = Digraph.from_arcs(5, SHIFT_EXAMPLE_ARCS)
    L = {v: [1, 2, 3] for v in range(5)}
    assert shift_trace(G, L, SHIFT_EXAMPLE_START, list(range(5)), 5) == SHIFT_EXAMPLE_PANELS


def test_spread_condition_forces_a_two_forest():
    rng = rng_for(11)
    for _ in range(200):
        B = random_bipartite(rng, 2, 3)
        if spread_condition(B):
            assert two_forest_bruteforce(B)


# ── registry ──────────────────────────────────
def test_registry_lists_every_theorem():
    ids = {tid for tid, _, _ in describe()}
    assert ids == set(THEOREMS)
    assert {"brooks", "dirac_bound", "refined_dirac", "k3_characterization", "ky_bound",
            "components", "gallai_low_degree", "list_gallai", "hajos",
            "dirac_join"} <= ids


def test_unknown_theorem(cfg):
    with pytest.raises(ParameterError):
        verify_theorem("fermat", {}, cfg)


@pytest.mark.parametrize("theorem, params", [
    ("brooks", {"nmax": 3}),
    ("unique_small", {"kmax": 3, "nmax": 4}),
    ("sanity", {"k": 3, "nmax": 4}),
    ("arc_connectivity", {"k": 3, "nmax": 4}),
    ("gallai_low_degree", {"k": 3, "nmax": 4}),
    ("components", {"k": 3, "nmax": 4}),
    ("low_cut", {"k": 3, "nmax": 4}),
    ("shift_trace", {}),
    ("hajos", {}),
    ("families", {"family_max": 6}),
    ("contraction", {"nmax": 5, "samples": 40}),
    ("y_construction", {"nmax": 5, "samples": 40}),
    ("two_forest", {"max_edges": 6}),
    ("strengthened_components", {"nmax": 5, "samples": 80}),
    ("list_gallai", {"nmax": 5, "samples": 10}),
    ("superadditivity", {"nmax": 4, "ks": [2, 3]}),
])
def test_quick_verifications_hold(cfg, theorem, params):
    report = verify_theorem(theorem, params, cfg)
    assert report.ok, report.violations[:3]
    assert report.seed == cfg.seed


def test_verification_is_seed_deterministic(cfg):
    a = verify_theorem("contraction", {"nmax": 5, "samples": 30}, cfg).instances_checked
    b = verify_theorem("contraction", {"nmax": 5, "samples": 30}, cfg).instances_checked
    assert a == b


@pytest.mark.slow
@pytest.mark.parametrize("theorem, params", [
    ("brooks", {"nmax": 5}),
    ("dirac_bound", {"k": 4, "nmax": 5}),
    ("dirac_bound", {"k": 4, "nmax": 6}),
    ("refined_dirac", {"k": 4, "nmax": 5}),
    ("refined_dirac", {"k": 4, "nmax": 6}),
    ("k3_characterization", {"nmax": 5}),
    ("k3_characterization", {"nmax": 6}),
    ("ky_bound", {"nmax": 5}),
    ("ks_k4", {"nmax": 5}),
    ("abhr_oriented", {"nmax": 5}),
    ("components", {"nmax": 5}),
    ("dirac_join", {"nmax": 6, "part_max": 3}),
    ("superadditivity", {"nmax": 5, "ks": [3]}),
])
def test_census_verifications_hold(cfg, theorem, params):
    report = verify_theorem(theorem, params, replace(cfg, budget_seconds=1800))
    assert report.ok, report.violations[:3]
    assert report.instances_checked > 0


def test_ky_bound_checks_every_small_k(cfg):
    report = verify_theorem("ky_bound", {"nmax": 4, "family_max": 5}, cfg)
    assert report.ok
    # C⃗_2..C⃗_4; ↔K_3 and the 4-vertex wheel; ↔K_4; then ↔K_5 and ↔K_5..↔K_12
    assert report.instances_checked == 3 + 2 + 1 + 1 + 8
    assert "enumerated instances per k: k=2: 3, k=3: 2, k=4: 1" in report.notes


def test_ky_lower_small_k():
    assert ky_lower(3, 7) == 14
    assert ky_lower(2, 6) == 4


@pytest.mark.slow
def test_two_forest_on_every_bipartite_graph_up_to_twelve_edges(cfg):
    report = verify_theorem("two_forest", {"max_edges": 12}, cfg)
    assert report.ok, report.violations[:3]
    total = sum(2 ** (s * t) for s in range(1, 13) for t in range(1, 13) if s * t <= 12)
    assert report.instances_checked == total


def test_all_bipartite_counts():
    graphs = list(all_bipartite(2))
    # (1,1): 2 subsets, (1,2) and (2,1): 4 each
    assert len(graphs) == 10
    assert {(len(B.left), len(B.right)) for B in graphs} == {(1, 1), (1, 2), (2, 1)}


def test_random_lists_reach_beyond_max_degree():
    rng = rng_for(2)
    G = Digraph.from_arcs(4, [(0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 2), (3, 0), (0, 3)])
    X = vset([0, 1, 2])
    longer, wider, outside_sizes = False, False, set()
    for _ in range(300):
        L = _random_lists(rng, G, X)
        for x in members(X):
            d = degrees(G, x).d_max
            assert len(L[x]) >= d
            longer |= len(L[x]) > d
            wider |= max(L[x]) > d
        outside_sizes.add(len(L[3]))
    assert longer and wider
    assert outside_sizes == {1, 2}


def test_list_facts_shift_every_sampled_colouring():
    # ↔K_3 with the same two colours everywhere: X = V, two L-dicolourings of every G − x
    G = complete_symmetric(3)
    L = {v: [1, 2] for v in range(3)}
    assert list_dicolourable(G, L) is None
    assert list_facts(G, G.vertices, L, colourings=50) is None
