"""theorems/registry.py — Verifier registry: theorem id -> engine, description, default parameters."""
from core.utils import ParameterError, RunConfig, log
from theorems import bounds_engine, families_engine, join_engine, list_engine, structure_engine
from theorems.report import Probe, VerificationReport

THEOREMS = {
    # id                        (engine, description, defaults)
    "brooks":                  (structure_engine.verify_brooks,
                                "χ⃗ <= Δ_max + 1 on connected digraphs, with the equality set",
                                {"nmax": 5}),
    "unique_small":            (structure_engine.verify_unique_small,
                                "the only k-dicritical digraphs on k and k+1 vertices; C⃗_n for k = 2",
                                {"kmax": 3, "nmax": 6}),
    "sanity":                  (structure_engine.verify_sanity,
                                "degree bounds, induced cycles, simple-neighbourhood duality",
                                {"nmax": 5}),
    "arc_connectivity":        (structure_engine.verify_arc_connectivity,
                                "k-dicritical digraphs are (k−1)-arc-connected",
                                {"nmax": 5}),
    "gallai_low_degree":       (structure_engine.verify_gallai_low_degree,
                                "degree-2(k−1) vertices induce a directed Gallai forest",
                                {"nmax": 5}),
    "components":              (structure_engine.verify_components,
                                "|π₀(G − S)| <= |π₀(G[S])| for S = {d <= 2(k−1)}",
                                {"nmax": 5}),
    "low_cut":                 (structure_engine.verify_low_cut,
                                "colour profile across cuts with at most k−1 arcs",
                                {"nmax": 5}),
    "dirac_bound":             (bounds_engine.verify_dirac_bound,
                                "|A| >= (k−1)n + k−3 for n > k >= 4",
                                {"k": 4, "nmax": 6}),
    "refined_dirac":           (bounds_engine.verify_refined_dirac,
                                "|A| >= (k−1)n + k−2 outside ↔K_k and D_k; tightness",
                                {"k": 4, "nmax": 6}),
    "ky_bound":                (bounds_engine.verify_ky_bound,
                                "|A| >= (k − 1/2 − 1/(k−1))n − k(1/2 − 1/(k−1))",
                                {"k": 5, "ks": [2, 3, 4], "nmax": 6, "family_max": 9}),
    "ks_k4":                   (bounds_engine.verify_ks_k4,
                                "4-dicritical, n ≠ 5: |A| >= ⌈(10n − 4)/3⌉",
                                {"nmax": 6}),
    "abhr_oriented":           (bounds_engine.verify_abhr_oriented,
                                "3-dicritical oriented graphs: |A| >= (7n + 2)/3",
                                {"nmax": 6}),
    "k3_characterization":     (families_engine.verify_k3_characterization,
                                "3-dicritical: ε = 2 iff in D'_3, otherwise ε >= 4",
                                {"nmax": 6}),
    "families":                (families_engine.verify_families,
                                "generated family members are k-dicritical",
                                {"family_max": 7}),
    "dirac_join":              (join_engine.verify_dirac_join,
                                "χ⃗ adds under Dirac join; dicritical iff both parts are",
                                {"nmax": 7, "part_max": 4}),
    "hajos":                   (join_engine.verify_hajos,
                                "Hajós join counts and dicriticality for every arc choice",
                                {}),
    "superadditivity":         (join_engine.verify_superadditivity,
                                "d_k(a+b−1) <= d_k(a) + d_k(b) − 1",
                                {"nmax": 5, "ks": [2, 3]}),
    "contraction":             (join_engine.verify_contraction,
                                "contracting an acyclic set never lowers χ⃗",
                                {"nmax": 7, "samples": 300}),
    "y_construction":          (join_engine.verify_y_construction,
                                "χ⃗(Y(G, R, φ)) >= k whenever χ⃗(G) >= k",
                                {"nmax": 7, "samples": 300}),
    "list_gallai":             (list_engine.verify_list_gallai,
                                "not L-dicolourable ⇒ G[X] is a directed Gallai forest, plus the forced facts",
                                {"nmax": 7, "samples": 10_000}),
    "shift_trace":             (list_engine.verify_shift_trace,
                                "clockwise shifting around a weak cycle reproduces the reference trace",
                                {}),
    "strengthened_components": (list_engine.verify_strengthened_components,
                                "component inequality hypotheses force χ⃗ <= k−1",
                                {"k": 3, "nmax": 7, "samples": 2000}),
    "two_forest":              (list_engine.verify_two_forest,
                                "2-forest search vs brute force and under the spread condition",
                                {"max_edges": 12}),
}


def describe() -> list:
    return [(tid, desc, defaults) for tid, (_, desc, defaults) in sorted(THEOREMS.items())]


def verify_theorem(theorem: str, params: dict = None, cfg: RunConfig = None) -> VerificationReport:
    if theorem not in THEOREMS:
        raise ParameterError(f"unknown theorem {theorem!r}; known: {', '.join(sorted(THEOREMS))}")
    cfg = cfg or RunConfig()
    engine, _, defaults = THEOREMS[theorem]
    merged = {**defaults, **{k: v for k, v in (params or {}).items() if v is not None}}
    log("VERIFY", f"{theorem} {merged} seed={cfg.seed} workers={cfg.worker_count}")
    probe = Probe(theorem, merged, cfg.seed, cfg.budget_seconds)
    if merged.get("nmax", 0) > cfg.exhaustive_max_n and theorem not in (
            "dirac_join", "contraction", "y_construction", "list_gallai",
            "strengthened_components"):
        probe.provenance("pruned")
    engine(probe, merged, cfg)
    return probe.finish()
