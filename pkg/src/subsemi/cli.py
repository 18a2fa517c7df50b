"""Command-line entry point wiring counting, cataloging, enumeration,
classification, verification, and export.

Exit codes: 0 success / all checks pass, 1 check failure, 2 usage or input error.
"""

import argparse
import csv
import json
import sys
import time
from pathlib import Path

from subsemi import analysis, catalog, verifier
from subsemi.config import from_env_and_args
from subsemi.counting import count_subuniverses_bruteforce, count_subuniverses_split
from subsemi.enumeration import enumerate_semilattices
from subsemi.errors import SubsemiError, UnknownStructureError
from subsemi.jsonio import (
    FormatError,
    count_report_to_dict,
    load_structure,
    structure_to_dict,
    structure_to_dot,
)
from subsemi.order import canonical_form


def _dump(data):
    return json.dumps(data, indent=2, sort_keys=True)


def _resolve_input(args):
    """(structure, labels) from --named or --input."""
    if getattr(args, "named", None):
        ns = catalog.build_named(args.named)
        return ns.structure, ns.labels
    if getattr(args, "input", None):
        return load_structure(args.input)
    raise FormatError("one of --named or --input is required")


def cmd_count(args, cfg):
    structure, _ = _resolve_input(args)
    report = count_subuniverses_bruteforce(structure, cfg.k)
    cross = count_subuniverses_split(structure, 0, cfg.k)
    assert cross.count == report.count
    print(_dump(count_report_to_dict(report)))
    return 0


def cmd_sigma(args, cfg):
    structure, _ = _resolve_input(args)
    report = count_subuniverses_bruteforce(structure, cfg.k)
    if cfg.output_format == "json":
        print(_dump(count_report_to_dict(report)))
    else:
        print(report.sigma)
    return 0


def cmd_catalog(args, cfg):
    rows = []
    for id_ in catalog.catalog_ids():
        ns = catalog.build_named(id_)
        rows.append({
            "id": ns.id,
            "n": ns.structure.n,
            "kind": type(ns.structure).__name__,
            "expected_sigma5": str(ns.expected_sigma5),
            "reported_sigma5": [str(v) for v in ns.reported_sigma5],
            "provenance": ns.provenance,
        })
    if cfg.output_format == "json":
        print(_dump(rows))
    elif cfg.output_format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["id", "n", "kind", "expected_sigma5",
                         "reported_sigma5", "provenance"])
        for r in rows:
            writer.writerow([r["id"], r["n"], r["kind"], r["expected_sigma5"],
                             ";".join(r["reported_sigma5"]), r["provenance"]])
    else:
        for r in rows:
            reported = ",".join(r["reported_sigma5"]) or "-"
            print(f"{r['id']:<6} n={r['n']:<2} {r['kind'][:7]:<8} "
                  f"sigma5={r['expected_sigma5']:<8} reported={reported:<10} {r['provenance']}")
    return 0


def cmd_enumerate(args, cfg):
    t0 = time.time()
    run = enumerate_semilattices(args.n, ceiling=cfg.ceiling_n, workers=cfg.workers)
    elapsed = time.time() - t0
    manifest = {
        "n": run.n,
        "count": len(run.structures),
        "stats": run.stats,
        "elapsed_seconds": round(elapsed, 3),
        "files": [],
    }
    if args.as_lattice_count:
        # adding a new bottom is a bijection onto the lattices one size up
        manifest["lattices_on_n_plus_1"] = len(run.structures)
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        for i, sl in enumerate(run.structures):
            fname = f"semilattice_{run.n}_{i:05d}.json"
            payload = structure_to_dict(sl)
            payload["canonical_code"] = canonical_form(sl.poset).code.hex()
            (outdir / fname).write_text(_dump(payload) + "\n")
            manifest["files"].append(fname)
        (outdir / "manifest.json").write_text(_dump(manifest) + "\n")
    print(_dump(manifest))
    return 0


def cmd_rank(args, cfg):
    report = verifier.rank(args.n, workers=cfg.workers)
    if cfg.output_format == "json":
        print(_dump(verifier.ranking_to_dict(report)))
    elif cfg.output_format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["rank", "count", "witnesses"])
        for i, v in enumerate(report.values, start=1):
            writer.writerow([i, v, len(report.witnesses[v])])
    else:
        for i, v in enumerate(report.values, start=1):
            wit = report.witnesses[v]
            print(f"rank {i:>2}: count={v:<6} witnesses={len(wit)}")
    return 0


def cmd_classify(args, cfg):
    structure, labels = _resolve_input(args)
    if not hasattr(structure, "top"):
        raise FormatError("classification needs a total semilattice (covers format)")
    result = {
        "n": structure.n,
        "narrows": sorted(labels[u] for u in analysis.narrows(structure)),
        "families": {},
    }
    for core_id in analysis.FAMILY_CORES:
        m = analysis.matches_family(structure, core_id)
        result["families"][core_id] = {
            "matched": m.matched,
            "c0_len": m.c0_len if m.matched else None,
            "c1_len": m.c1_len if m.matched else None,
        }
    print(_dump(result))
    return 0


def cmd_verify_theorem(args, cfg):
    result = verifier.verify_theorem(args.n, workers=cfg.workers)
    if cfg.output_format == "json":
        print(_dump(verifier.theorem_to_dict(result)))
    else:
        for c, e, m in result.top3:
            print(f"top3 context: count={c} expected={e} {'ok' if m else 'DIFFERS'}")
        for c in result.claims:
            line = f"claim ({c.claim}) rank {c.expected_rank}: {c.status}"
            if c.notes:
                line += f"  [{c.notes}]"
            print(line)
            for code in c.extra_witnesses:
                sl = _structure_by_code(args.n, code)
                print(f"    extra witness {code[:16]}... covers={list(sl.poset.covers)}")
    return 0 if result.all_passed else 1


def _structure_by_code(n, code_hex):
    for sl in enumerate_semilattices(n).structures:
        if canonical_form(sl.poset).code.hex() == code_hex:
            return sl
    raise UnknownStructureError(code_hex)


def cmd_verify_lemmas(args, cfg):
    report = verifier.verify_lemmas()
    if cfg.output_format == "json":
        print(_dump(verifier.lemmas_to_dict(report)))
    else:
        for e in report.entries:
            reported = ", ".join(str(v) for v in e.reported_values)
            print(f"{e.location:<16} reported={reported:<10} computed={e.computed} "
                  f"({float(e.computed)}): {e.classification}")
        for p in report.properties:
            print(f"property {p.name}: {p.instances} instances, {p.violations} violations")
        for note in report.notes:
            print(f"note: {note}")
    return 0 if report.all_passed else 1


def cmd_export_dot(args, cfg):
    try:
        ns = catalog.build_named(args.id)
        structure, labels = ns.structure, ns.labels
    except UnknownStructureError:
        if Path(args.id).exists():
            structure, labels = load_structure(args.id)
        else:
            raise
    text = structure_to_dot(structure, labels, name=args.id)
    if args.out:
        Path(args.out).write_text(text)
    else:
        print(text, end="")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="subsemi",
        description="Subuniverse counting and ranking verification for finite "
                    "join-semilattices",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.set_defaults(fn=fn)
        return p

    def structure_args(p):
        p.add_argument("--named", help="catalog id (see `subsemi catalog`)")
        p.add_argument("--input", help="structure JSON file")
        p.add_argument("--k", type=int, default=5, help="sigma reference size")
        p.add_argument("--json", action="store_true")

    p = add("count", cmd_count, help="count subuniverses")
    structure_args(p)
    p = add("sigma", cmd_sigma, help="relative number of subuniverses, exact")
    structure_args(p)

    p = add("catalog", cmd_catalog, help="list named structures")
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true")

    p = add("enumerate", cmd_enumerate, help="all n-element semilattices up to iso")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="directory for one JSON file per structure")
    p.add_argument("--as-lattice-count", action="store_true",
                   help="also report the count as lattices on n+1 elements")
    p.add_argument("--workers", type=int, help="defaults to machine cores")
    p.add_argument("--ceiling", type=int, help="override enumeration ceiling")

    p = add("rank", cmd_rank, help="distinct subuniverse counts at size n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--workers", type=int, help="defaults to machine cores")
    p.add_argument("--ceiling", type=int)

    p = add("classify", cmd_classify, help="narrows and family membership")
    p.add_argument("--named")
    p.add_argument("--input")
    p.add_argument("--json", action="store_true")

    p = add("verify-theorem", cmd_verify_theorem, help="check the ranking claims at n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--workers", type=int, help="defaults to machine cores")
    p.add_argument("--ceiling", type=int)

    p = add("verify-lemmas", cmd_verify_lemmas,
            help="catalog values and lemma property suites")
    p.add_argument("--json", action="store_true")

    p = add("export-dot", cmd_export_dot, help="DOT digraph of a structure")
    p.add_argument("id", help="catalog id or structure JSON path")
    p.add_argument("--out")

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = from_env_and_args(args)
    try:
        return args.fn(args, cfg)
    except SubsemiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
