"""main.py — Command-line entry point. Run: python main.py <command> ..."""
import argparse
import sys

from core.canon import canonical_form
from core.colouring import dichromatic_number
from core.criticality import is_k_dicritical
from core.digraph import degrees, excess, potential
from core.families import gen_family
from core.formats import read_digraphs, write_digraph
from core.structure import arc_connectivity, blocks, clusters, is_gallai_forest
from core.utils import DicritixError, RunConfig, dumps, load_config, log, members, set_quiet
from scanner.census_engine import CensusFilters, enumerate_digraphs, enumerate_k_dicritical, min_arcs_table
from theorems.registry import THEOREMS, describe, verify_theorem

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


# ── helpers ───────────────────────────────────
def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _colouring_text(phi: dict) -> str:
    return " ".join(f"{v}:{phi[v]}" for v in sorted(phi))


def _runconfig(args) -> RunConfig:
    cfg = load_config(args.config)
    output = "json" if args.json else args.output
    return RunConfig.from_mapping(cfg, worker_count=args.workers, seed=args.seed,
                                  budget_seconds=args.budget, output=output)


def _need_k(args, least: int = 1) -> int:
    if args.k is None:
        raise DicritixError(f"{args.command} needs --k")
    if args.k < least:
        raise DicritixError(f"--k must be >= {least}")
    return args.k


# ── commands ──────────────────────────────────
def cmd_chi(args, cfg: RunConfig) -> int:
    rows = []
    for G in read_digraphs(args.file):
        value, phi = dichromatic_number(G)
        rows.append({"digraph6": write_digraph(G), "chi": value, "colouring": phi})
    if cfg.output == "json":
        _emit(dumps(rows if len(rows) > 1 else rows[0], indent=2))
    else:
        for r in rows:
            _emit(f"{r['digraph6']} chi={r['chi']} colouring={_colouring_text(r['colouring'])}")
    return EXIT_OK


def cmd_critical(args, cfg: RunConfig) -> int:
    k = _need_k(args)
    rows = []
    for G in read_digraphs(args.file):
        rows.append({"digraph6": write_digraph(G), "k": k, **is_k_dicritical(G, k).to_dict()})
    if cfg.output == "json":
        _emit(dumps(rows if len(rows) > 1 else rows[0], indent=2))
    else:
        for r in rows:
            verdict = "dicritical" if r["is_dicritical"] else "not dicritical"
            arc = f" violating_arc={tuple(r['violating_arc'])}" if r["violating_arc"] else ""
            _emit(f"{r['digraph6']} k={k} chi={r['chi']} {verdict}{arc} "
                  f"min_degree_ok={r['min_degree_ok']} dmin_ok={r['dmin_ok']} "
                  f"induced_cycle_ok={r['induced_cycle_ok']} "
                  f"simple_neighbour_duality_ok={r['simple_neighbour_duality_ok']}")
    return EXIT_OK


def cmd_gen(args, cfg: RunConfig) -> int:
    _emit(write_digraph(gen_family(args.spec), args.format))
    return EXIT_OK


def props(G, k: int) -> dict:
    """Structural profile used by the props command."""
    low = sum(1 << v for v in range(G.n) if G.degree(v) <= 2 * (k - 1))
    dec = blocks(G)
    gallai, bad = is_gallai_forest(G)
    low_gallai, low_bad = is_gallai_forest(G.induced(low)) if low else (True, None)
    out = {
        "digraph6":        write_digraph(G),
        "n":               G.n,
        "arcs":            G.arc_count,
        "k":               k,
        "degrees":         [vars(degrees(G, v)) for v in range(G.n)],
        "excess":          excess(G, k),
        "potential":       potential(G, k) if k >= 4 else None,
        "blocks":          [{"vertices": members(b), "kind": kind.value}
                            for b, kind in zip(dec.blocks, dec.kinds)],
        "separating_vertices": members(dec.separating_vertices),
        "gallai_forest":   gallai,
        "offending_block": members(bad) if bad else None,
        "low_degree_set":  members(low),
        "low_degree_gallai_forest": low_gallai,
        "arc_connectivity": arc_connectivity(G) if G.n >= 2 else None,
        "clusters":        [members(c) for c in clusters(G, k)] if k >= 3 else None,
    }
    if low_bad:
        out["low_degree_offending_block"] = members(low_bad)
    return out


def cmd_props(args, cfg: RunConfig) -> int:
    k = _need_k(args, least=2)
    rows = [props(G, k) for G in read_digraphs(args.file)]
    if cfg.output == "json":
        _emit(dumps(rows if len(rows) > 1 else rows[0], indent=2))
        return EXIT_OK
    for r in rows:
        _emit(f"{r['digraph6']}  n={r['n']} arcs={r['arcs']} k={k}")
        for v, d in enumerate(r["degrees"]):
            _emit(f"  v{v}: d+={d['d_plus']} d-={d['d_minus']} d={d['d']} "
                  f"dmin={d['d_min']} dmax={d['d_max']}")
        _emit(f"  excess={r['excess']}")
        if r["potential"] is not None:
            _emit(f"  potential={r['potential']}")
        for b in r["blocks"]:
            _emit(f"  block {b['vertices']}: {b['kind']}")
        _emit(f"  gallai_forest={r['gallai_forest']} "
              f"low_degree_gallai_forest={r['low_degree_gallai_forest']}")
        _emit(f"  arc_connectivity={r['arc_connectivity']}")
        if r["clusters"] is not None:
            _emit(f"  clusters={r['clusters']}")
    return EXIT_OK


def cmd_enumerate(args, cfg: RunConfig) -> int:
    if args.n is None:
        raise DicritixError("enumerate needs --n")
    if args.dicritical:
        found = enumerate_k_dicritical(_need_k(args), args.n, cfg)
    else:
        filters = CensusFilters(args.min_degree or 0, args.min_dmin or 0, args.connected)
        found = enumerate_digraphs(args.n, filters, cfg)
    for G in found:
        _emit(write_digraph(G, args.format))
    log("CENSUS", f"emitted {len(found)} digraphs")
    return EXIT_OK


def cmd_table(args, cfg: RunConfig) -> int:
    k = _need_k(args, least=2)
    if args.nmax is None:
        raise DicritixError("table needs --nmax")
    table = min_arcs_table(k, args.nmax, cfg)
    if cfg.output == "json":
        _emit(dumps(table.to_dict(), indent=2))
    else:
        _emit(table.to_frame().to_string(index=False))
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig) -> int:
    if args.theorem == "list":
        for tid, desc, defaults in describe():
            _emit(f"{tid:<24} {desc}  defaults={defaults}")
        return EXIT_OK
    params = {"k": args.k, "nmax": args.nmax, "samples": args.samples}
    report = verify_theorem(args.theorem, params, cfg)
    if cfg.output == "json":
        _emit(dumps(report.to_dict(), indent=2))
    else:
        _emit(report.summary())
        for d6, detail in sorted(report.violations, key=lambda v: v[0]):
            _emit(f"  {d6}  {dumps(detail)}")
        for note in report.notes:
            _emit(f"  note: {note}")
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_canon(args, cfg: RunConfig) -> int:
    for G in read_digraphs(args.file):
        _emit(canonical_form(G, cfg.canon_max_n).hex())
    return EXIT_OK


COMMANDS = {
    "chi":       cmd_chi,
    "critical":  cmd_critical,
    "gen":       cmd_gen,
    "props":     cmd_props,
    "enumerate": cmd_enumerate,
    "table":     cmd_table,
    "verify":    cmd_verify,
    "canon":     cmd_canon,
}


# ── argument parsing ──────────────────────────
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--nmax", type=int)
    common.add_argument("--samples", type=int)
    common.add_argument("--seed", type=int)
    common.add_argument("--workers", type=int)
    common.add_argument("--budget", type=int, help="time budget in seconds")
    common.add_argument("--output", choices=["text", "json"])
    common.add_argument("--json", action="store_true", help="same as --output json")
    common.add_argument("--format", choices=["digraph6", "edgelist"], default="digraph6")
    common.add_argument("--config", help="alternate config.json")
    common.add_argument("--quiet", action="store_true", help="suppress [TAG] progress lines")

    parser = argparse.ArgumentParser(prog="dicritix", description="Dicritical digraph toolkit")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("chi", "critical", "props", "canon"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("file", nargs="?", default="-", help="digraph6 stream or edge list, '-' for stdin")
    sub.add_parser("gen", parents=[common]).add_argument("spec", help='family spec, e.g. "Dk(k=4,n=1)"')
    p = sub.add_parser("enumerate", parents=[common])
    p.add_argument("--dicritical", action="store_true")
    p.add_argument("--min-degree", type=int)
    p.add_argument("--min-dmin", type=int)
    p.add_argument("--connected", action="store_true")
    sub.add_parser("table", parents=[common])
    sub.add_parser("verify", parents=[common]).add_argument(
        "theorem", choices=sorted(THEOREMS) + ["list"])
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    set_quiet(args.quiet)
    try:
        cfg = _runconfig(args)
        log("CONFIG", f"workers={cfg.worker_count} seed={cfg.seed} budget={cfg.budget_seconds}s "
                      f"exhaustive_max_n={cfg.exhaustive_max_n}")
        return COMMANDS[args.command](args, cfg)
    except (DicritixError, OSError) as e:
        print(f"[ERROR] {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
