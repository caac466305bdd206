"""theorems/families_engine.py — The k = 3 excess characterization and the claimed dicriticality
of every generated family."""
from core.criticality import is_k_dicritical
from core.digraph import excess
from core.families import (d3prime_members, gen_Dk, gen_Fk, is_in_D3prime, order_construction)
from theorems.instances import dicritical_instances
from theorems.structure_engine import is_symmetric_odd_cycle


def verify_k3_characterization(probe, params, cfg):
    """3-dicritical, not a symmetric odd cycle: ε = 2 iff in D'_3, otherwise ε >= 4."""
    members_seen = 0
    for n, G in dicritical_instances(3, params.get("nmax", 6), cfg):
        if is_symmetric_odd_cycle(G):
            continue
        eps = excess(G, 3)
        inside = is_in_D3prime(G, cfg.canon_max_n)
        members_seen += inside
        probe.check(G, (eps == 2) == inside and (eps == 2 or eps >= 4),
                    {"n": n, "excess": eps, "in_D3prime": inside})
        probe.tick()
    probe.note(f"{members_seen} enumerated digraphs recognised as D'_3 members")


def family_members(max_order: int):
    """(k, label, digraph) for generated family members of order <= max_order."""
    for k in range(2, 6):
        for n in range(k, max_order + 1):
            yield k, f"order({k},{n})", order_construction(k, n)
    for k in range(4, (max_order + 1) // 2 + 1):
        for m in range(1, k - 1):
            yield k, f"Dk({k},{m})", gen_Dk(k, m)
        for a1 in range(1, k - 1):
            a2 = k - 1 - a1
            yield k, f"Fk({k};{a1},{a2},{a2},{a1})", gen_Fk(k, a1, a2, a2, a1)
    for n in range(4, max_order + 1):
        for G in d3prime_members(n):
            yield 3, f"D3'({n})", G


def verify_families(probe, params, cfg):
    """Every generated member is k-dicritical; D'_3 members have ε = 2."""
    probe.provenance("family")
    for k, label, G in family_members(params.get("family_max", 7)):
        rep = is_k_dicritical(G, k)
        ok = rep.is_dicritical and (not label.startswith("D3'") or excess(G, 3) == 2)
        probe.check(G, ok, {"member": label, "chi": rep.chi, "dicritical": rep.is_dicritical})
        probe.tick()
