"""theorems/join_engine.py — Dirac and Hajós joins, superadditivity of d_k, contraction and the
Y-construction."""
from core.canon import canonical_form
from core.colouring import chi, is_acyclic, k_dicolourable
from core.criticality import is_dicritical, is_k_dicritical
from core.digraph import contract, dirac_join, y_construction
from core.families import complete_symmetric, directed_cycle, hajos_join
from core.utils import members
from scanner.census_engine import enumerate_digraphs, min_arcs_table
from theorems.instances import random_digraph, random_subset, rng_for


def verify_dirac_join(probe, params, cfg):
    """χ⃗(↔K_2(G1, G2)) = χ⃗(G1) + χ⃗(G2); the join is dicritical iff both parts are."""
    nmax = params.get("nmax", 7)
    part_max = min(params.get("part_max", 4), nmax - 1)
    pool = []
    for n in range(1, part_max + 1):
        for G in enumerate_digraphs(n, cfg=cfg):
            pool.append((G, chi(G), is_dicritical(G)))
    for G1, c1, d1 in pool:
        for G2, c2, d2 in pool:
            if G1.n + G2.n > nmax:
                continue
            J = dirac_join(G1, G2)
            rep = is_k_dicritical(J, c1 + c2)
            probe.check(J, rep.chi == c1 + c2 and rep.is_dicritical == (d1 and d2),
                        {"chi": [c1, c2, rep.chi], "dicritical": [d1, d2, rep.is_dicritical]})
            probe.tick()


HAJOS_CASES = (
    ("K3+K3", lambda: complete_symmetric(3), lambda: complete_symmetric(3), 3),
    ("C4+C3", lambda: directed_cycle(4), lambda: directed_cycle(3), 2),
    ("W4+K3", lambda: dirac_join(complete_symmetric(1), directed_cycle(3)),
     lambda: complete_symmetric(3), 3),
)


def verify_hajos(probe, params, cfg):
    """Every arc choice: |V| = n1+n2−1, |A| = m1+m2−1 and the join stays k-dicritical."""
    probe.provenance("family")
    for name, make1, make2, k in HAJOS_CASES:
        G1, G2 = make1(), make2()
        for a1 in G1.arcs():
            for a2 in G2.arcs():
                H = hajos_join(G1, a1, G2, a2)
                counts = H.n == G1.n + G2.n - 1 and H.arc_count == G1.arc_count + G2.arc_count - 1
                crit = is_k_dicritical(H, k).is_dicritical
                probe.check(H, counts and crit, {"case": name, "a1": a1, "a2": a2,
                                                 "counts": counts, "dicritical": crit})
                probe.tick()
    K = complete_symmetric(3)
    for a1 in K.arcs():
        for a2 in K.arcs():
            H, H_swapped = hajos_join(K, a1, K, a2), hajos_join(K, a2, K, a1)
            probe.check(H, canonical_form(H) == canonical_form(H_swapped),
                        {"case": "swap K3+K3", "a1": a1, "a2": a2})


def verify_superadditivity(probe, params, cfg):
    """d_k(a+b−1) <= d_k(a) + d_k(b) − 1 on exhaustive entries."""
    nmax = params.get("nmax", 5)
    for k in params.get("ks", [2, 3]):
        exact = min_arcs_table(k, nmax, cfg).exhaustive()
        for a in exact:
            for b in exact:
                if a + b - 1 in exact:
                    lhs, rhs = exact[a + b - 1], exact[a] + exact[b] - 1
                    probe.check(None, lhs <= rhs, {"k": k, "a": a, "b": b, "lhs": lhs, "rhs": rhs})
        if k == 3 and 5 in exact and 3 in exact:
            probe.check(None, exact[5] <= 11, {"k": 3, "d_3(5)": exact[5], "hajos_bound": 11})


def verify_contraction(probe, params, cfg):
    """Contracting an acyclic set never lowers χ⃗."""
    probe.provenance("random")
    rng = rng_for(cfg.seed)
    for _ in range(params.get("samples", 300)):
        n = int(rng.integers(2, params.get("nmax", 7) + 1))
        G = random_digraph(rng, n)
        S = random_subset(rng, n, 0.4)
        if not S or not is_acyclic(G, S):
            continue
        H, _ = contract(G, [S])
        before, after = chi(G), chi(H)
        probe.check(G, after >= before, {"S": members(S), "chi": before, "chi_contracted": after})
        probe.tick()


def verify_y_construction(probe, params, cfg):
    """χ⃗(G) >= k and φ a (k−1)-dicolouring of G[R] ⇒ χ⃗(Y(G, R, φ)) >= k."""
    probe.provenance("random")
    rng = rng_for(cfg.seed)
    for _ in range(params.get("samples", 300)):
        n = int(rng.integers(3, params.get("nmax", 7) + 1))
        G = random_digraph(rng, n, p=0.35, p_digon=0.35)
        k = chi(G)
        if k < 2:
            continue
        R = random_subset(rng, n, 0.5)
        if not R or R == G.vertices:
            continue
        inner = k_dicolourable(G.induced(R), k - 1)
        if inner is None:
            continue
        verts = members(R)
        phi = {verts[i]: c for i, c in inner.items()}
        Y = y_construction(G, R, phi)
        probe.check(G, chi(Y) >= k, {"k": k, "R": members(R), "phi": phi})
        probe.tick()
