"""Command line front end: ``sgtree {table,stable-vectors,verify,inspect,tree}``."""
from __future__ import annotations

import argparse
import json
import os
import sys
import warnings

from . import analysis
from .gapvectors import MAX_ELL, cotype, gap_vector, stable_vectors
from .semigroup import SemigroupError, from_generators, parent
from .tree import (
    MAX_GENUS,
    ExplorationConfig,
    children,
    descendant_type_profile,
    is_leaf,
    tabulate,
    to_dot,
)

DEFAULT_GMAX = 20
TREE_GMAX = 8
SHIFT_GMAX = 12

# violations that reproduce published data rather than signal a regression
EXPECTED_VIOLATIONS = {
    "column-monotonicity-type-1": "n(g, 1) is not increasing; e.g. n(22, 1) = 546 > 498 = n(23, 1)",
}

CHECKS = ("stabilizer", "unimodality", "monotonicity", "leaf-bound", "bras-amoros", "shift")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _gens(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma separated list, got {text}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sgtree", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def walk_options(p):
        p.add_argument("--gmax", type=_positive, default=DEFAULT_GMAX)
        p.add_argument("--threads", type=_positive, default=None,
                       help="worker threads (fallback: $SGTREE_THREADS)")
        p.add_argument("--split-depth", type=int, default=0,
                       help="genus at which subtrees are handed to workers")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p = sub.add_parser("table", help="n(g,t), l(g,t) or the leaf ratio series")
    p.add_argument("kind", choices=("ngt", "lgt", "ratio"))
    p.add_argument("--format", choices=("csv", "matrix", "json"), default="csv")
    walk_options(p)

    p = sub.add_parser("stable-vectors", help="stable gap vectors of a given ell")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--format", choices=("csv", "text", "json"), default="text")
    p.add_argument("--out", default=None)

    p = sub.add_parser("verify", help="finite-range checks of the theorems and conjectures")
    p.add_argument("which", choices=(*CHECKS, "all"))
    p.add_argument("--format", choices=("text", "json"), default="text")
    walk_options(p)

    p = sub.add_parser("inspect", help="invariants of one semigroup")
    p.add_argument("--gens", type=_gens, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", default=None)

    p = sub.add_parser("tree", help="DOT export of the first levels of the tree")
    p.add_argument("--gmax", type=_positive, default=3)
    p.add_argument("--order", choices=("generator", "type"), default="generator")
    p.add_argument("--format", choices=("dot",), default="dot")
    p.add_argument("--out", default=None)
    return parser


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _config(args, parser) -> ExplorationConfig:
    if args.gmax > MAX_GENUS:
        parser.error(f"--gmax must be at most {MAX_GENUS}")
    if not 0 <= args.split_depth < args.gmax:
        parser.error("--split-depth must lie in [0, gmax)")
    threads = args.threads
    if threads is None and os.environ.get("SGTREE_THREADS"):
        threads = int(os.environ["SGTREE_THREADS"])
    return ExplorationConfig(args.gmax, args.split_depth, threads=threads)


def cmd_table(args, parser) -> int:
    stats = tabulate(_config(args, parser))
    if args.kind == "ratio":
        rows = analysis.ratio_series(stats.counts, stats.leaves)
        if args.format == "json":
            text = json.dumps([{"g": r.g, "leaves": r.leaves, "total": r.total,
                                "ratio": str(r.ratio)} for r in rows], indent=2) + "\n"
        else:
            lines = [] if args.format == "matrix" else ["genus,leaves,total,ratio"]
            lines += [f"{r.g},{r.leaves},{r.total},{r.ratio}" for r in rows]
            text = "\n".join(lines) + "\n"
    else:
        table = stats.counts if args.kind == "ngt" else stats.leaves
        if args.format == "csv":
            text = table.to_csv()
        elif args.format == "matrix":
            text = table.to_matrix()
        else:
            text = json.dumps(table.to_dict(), indent=2) + "\n"
    _emit(text, args.out)
    return 0


def cmd_stable_vectors(args, parser) -> int:
    if not 0 <= args.ell <= MAX_ELL:
        parser.error(f"--ell must lie in [0, {MAX_ELL}]")
    vectors = stable_vectors(args.ell)
    if args.format == "csv":
        text = "ell,vector,cotype\n" + "".join(f"{args.ell},{v},{cotype(v)}\n" for v in vectors)
    elif args.format == "json":
        text = json.dumps({"ell": args.ell, "count": len(vectors),
                           "vectors": [str(v) for v in vectors]}, indent=2) + "\n"
    else:
        text = ",".join(map(str, vectors)) + f"\ncount={len(vectors)}\n"
    _emit(text, args.out)
    return 0


def run_checks(which: str, stats) -> list[analysis.ConjectureReport]:
    counts, leaves = stats.counts, stats.leaves
    G = stats.genus_max
    selected = CHECKS if which == "all" else (which,)
    reports = []
    if "stabilizer" in selected:
        sizes = {ell: len(stable_vectors(ell)) for ell in range(1, min((G + 1) // 3, MAX_ELL) + 1)}
        reports.append(analysis.stabilizer_report(counts, sizes))
    if "unimodality" in selected:
        reports.append(analysis.check_row_unimodality(counts, "row-unimodality-n"))
        reports.append(analysis.check_row_unimodality(leaves, "row-unimodality-leaves"))
    if "monotonicity" in selected:
        reports.append(analysis.check_column_monotonicity(counts))
        reports.append(analysis.check_column_monotonicity(counts, [1], "column-monotonicity-type-1"))
    if "leaf-bound" in selected:
        reports.append(analysis.leaf_type_bound_report(leaves))
    if "bras-amoros" in selected:
        reports.extend(analysis.bras_amoros_check(counts.totals()))
    if "shift" in selected:
        reports.append(analysis.shift_bijection_report(min(G, SHIFT_GMAX)))
    return reports


def cmd_verify(args, parser) -> int:
    stats = tabulate(_config(args, parser))
    reports = run_checks(args.which, stats)
    unexpected = [r for r in reports if r.verdict == analysis.VIOLATED
                  and r.name not in EXPECTED_VIOLATIONS]
    if args.format == "json":
        text = json.dumps([r.to_dict() for r in reports], indent=2, default=str) + "\n"
    else:
        lines = []
        for r in reports:
            line = r.summary()
            if r.verdict == analysis.VIOLATED and r.name in EXPECTED_VIOLATIONS:
                line += f"\n  expected: {EXPECTED_VIOLATIONS[r.name]}"
            lines.append(line)
        lines.append("FAIL" if unexpected else "OK")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 1 if unexpected else 0


def cmd_inspect(args, parser) -> int:
    try:
        s = from_generators(args.gens)
    except SemigroupError as exc:
        parser.error(str(exc))
    except ValueError as exc:
        parser.error(str(exc))
    kids = children(s)
    info = s.to_dict()
    info["PF"] = list(s.pseudo_frobenius.elements)
    info["leaf"] = is_leaf(s)
    info["children"] = [{"removed": c.frobenius, "gens": list(c.minimal_generators), "t": c.type}
                        for c in kids]
    info["descendant_type_profile"] = list(descendant_type_profile(s))
    info["parent"] = list(parent(s).minimal_generators) if s.genus else None
    if s.genus:
        v = gap_vector(s)
        info["gap_vector"] = str(v)
        info["cotype"] = cotype(v)
    if args.format == "json":
        text = json.dumps(info, indent=2) + "\n"
    else:
        pf = ",".join(map(str, info["PF"]))
        lines = [str(s), f"leaf={'true' if info['leaf'] else 'false'} t={s.type} PF={{{pf}}}"]
        lines.append(f"t={s.type} g={s.genus} F={s.frobenius} m={s.multiplicity} "
                     f"e={s.embedding_dimension}")
        if s.genus == 0:
            lines.append("root (N_0), no parent")
        else:
            lines.append(f"parent=<{','.join(map(str, info['parent']))}>")
            lines.append(f"gap_vector={info['gap_vector']} cotype={info['cotype']}")
        lines.append("children types " + ",".join(str(c.type) for c in kids))
        for c in kids:
            lines.append(f"  -{c.frobenius}: <{','.join(map(str, c.minimal_generators))}> t={c.type}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def cmd_tree(args, parser) -> int:
    if args.gmax > TREE_GMAX:
        parser.error(f"tree export is limited to --gmax <= {TREE_GMAX}")
    _emit(to_dot(args.gmax, args.order), args.out)
    return 0


COMMANDS = {
    "table": cmd_table,
    "stable-vectors": cmd_stable_vectors,
    "verify": cmd_verify,
    "inspect": cmd_inspect,
    "tree": cmd_tree,
}


def main(argv=None) -> int:
    warnings.filterwarnings("ignore", module="numba")
    parser = build_parser()
    args = parser.parse_args(argv)
    return COMMANDS[args.command](args, parser)


if __name__ == "__main__":
    sys.exit(main())
