"""Command-line entry point.

Subcommands: count, construct, transform, enumerate, verify, profile.
Data goes to stdout, diagnostics to stderr; output is byte-identical for a
fixed argv (and seed).  Exit codes: 0 success, 1 verification failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .counting import count_report, count_subtrees, count_leaf_subtrees
from .enumeration import MAX_ORDER, TreeConstraint, trees_matching
from .families import FAMILIES, FORMULA_DISPLAY, FamilySpec, closed_form, construct
from .invariants import invariant_profile
from .transforms import TransformSpec, apply_transform
from .tree import parse_tree, serialize_tree
from .verify import (DEFAULT_RANGE, LEMMA_TAGS, THEOREM_TAGS,
                     run_lemma_suite, verify_theorem)


def _read_tree(path: str, fmt: str):
    text = sys.stdin.read() if path == "-" else open(path, "r", encoding="ascii").read()
    return parse_tree(text, fmt)


def _dump(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def _add_io_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, help="tree file, or - for stdin")
    p.add_argument("--format", choices=("edgelist", "levelseq"), default="edgelist",
                   help="tree text format (default edgelist)")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--csv", action="store_true", help="emit CSV instead of text")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treecount",
        description="Count subtrees, build extremal tree families, and verify "
                    "their extremal properties exhaustively.")
    parser.add_argument("--version", action="version", version=f"treecount {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="subtree counts and Wiener index of one tree")
    _add_io_args(p)

    p = sub.add_parser("construct", help="build a named extremal family member")
    p.add_argument("--family", required=True, choices=FAMILIES)
    for flag in ("n", "q", "k", "a", "b", "delta", "d", "m"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--closed-form", choices=("F", "Fstar"),
                   help="print the closed-form count instead of the tree")
    p.add_argument("--format", choices=("edgelist", "levelseq"), default="edgelist")

    p = sub.add_parser("transform", help="apply one tree rewrite")
    _add_io_args(p)
    p.add_argument("--kind", required=True, choices=("A", "B", "C", "Cprime"))
    p.add_argument("--u", type=int, help="A: cut vertex; B: kept endpoint")
    p.add_argument("--v", type=int, help="B: removed endpoint; C/Cprime: anchor")
    p.add_argument("--component-root", type=int, help="A: vertex naming the branch")

    p = sub.add_parser("enumerate", help="all non-isomorphic trees of one order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--matching", type=int)
    p.add_argument("--domination", type=int)
    p.add_argument("--diameter", type=int)
    p.add_argument("--leaves", type=int)
    p.add_argument("--min-max-degree", type=int)
    p.add_argument("--perfect-matching", action="store_true", default=None)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-order", type=int, default=MAX_ORDER)

    p = sub.add_parser("verify", help="check a theorem exhaustively or run a lemma suite")
    p.add_argument("--theorem", choices=THEOREM_TAGS)
    p.add_argument("--lemma", choices=LEMMA_TAGS)
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--samples", type=int, default=300)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--formula-variant", choices=("sum", "product"), default="sum",
                   help="T4.8 binomial-tail reading (product reproduces the "
                        "flawed literal display)")
    p.add_argument("--json", metavar="PATH", help="also write the JSON report here")
    p.add_argument("--csv", action="store_true")

    p = sub.add_parser("profile", help="matching/domination/diameter/leaf profile")
    _add_io_args(p)

    return parser


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _cmd_count(args) -> int:
    report = count_report(_read_tree(args.input, args.format))
    d = report.to_json_dict()
    if args.json:
        print(_dump(d))
    elif args.csv:
        print(_csv_text(["n", "F", "Fstar", "W"], [[d["n"], d["F"], d["Fstar"], d["W"]]]),
              end="")
    else:
        print(f"n      = {report.n}")
        print(f"F      = {report.F}")
        print(f"Fstar  = {report.Fstar}")
        print(f"W      = {report.wiener}")
        print("f      = " + " ".join(f"{v}:{c}" for v, c in sorted(report.f_vertex.items())))
        print("fstar  = " + " ".join(f"{v}:{c}" for v, c in sorted(report.fstar_vertex.items())))
    return 0


def _cmd_construct(args) -> int:
    spec = FamilySpec(family=args.family, n=args.n, q=args.q, k=args.k, a=args.a,
                      b=args.b, delta=args.delta, d=args.d, m=args.m)
    if args.closed_form:
        form = closed_form(spec, args.closed_form)
        print(f"{form.value} ({FORMULA_DISPLAY[form.formula_id]})")
        return 0
    print(serialize_tree(construct(spec), args.format), end="")
    return 0


def _cmd_transform(args) -> int:
    t = _read_tree(args.input, args.format)
    spec = TransformSpec(kind=args.kind, u=args.u, v=args.v,
                         component_root=args.component_root)
    out, _ = apply_transform(t, spec)
    delta = {
        "tree": serialize_tree(out),
        "F_before": str(count_subtrees(t)),
        "F_after": str(count_subtrees(out)),
        "Fstar_before": str(count_leaf_subtrees(t)),
        "Fstar_after": str(count_leaf_subtrees(out)),
    }
    if args.json:
        print(_dump(delta))
    else:
        print(serialize_tree(out), end="")
        print(_dump({k: v for k, v in delta.items() if k != "tree"}))
    return 0


def _sharded_matching(n, constraint, jobs, max_order):
    """Parallel filter pass; emission order matches the sequential stream."""
    import multiprocessing

    with multiprocessing.get_context("fork").Pool(jobs) as pool:
        parts = pool.map(_filter_shard, [(n, constraint, s, jobs, max_order)
                                         for s in range(jobs)])
    tagged = [item for part in parts for item in part]
    for _, t in sorted(tagged, key=lambda item: item[0]):
        yield t


def _filter_shard(args):
    n, constraint, shard, jobs, max_order = args
    from .enumeration import all_level_sequences
    from .tree import tree_from_level_sequence
    out = []
    for i, seq in enumerate(all_level_sequences(n, max_order)):
        if i % jobs != shard:
            continue
        t = tree_from_level_sequence(seq)
        if constraint.admits(t):
            out.append((i, t))
    return out


def _cmd_enumerate(args) -> int:
    constraint = TreeConstraint(
        matching=args.matching, domination=args.domination, diameter=args.diameter,
        leaves=args.leaves, min_max_degree=args.min_max_degree,
        perfect_matching=args.perfect_matching)
    if args.jobs > 1:
        stream = _sharded_matching(args.n, constraint, args.jobs, args.max_order)
    else:
        stream = trees_matching(args.n, constraint, max_order=args.max_order)
    if args.count_only:
        print(sum(1 for _ in stream))
        return 0
    if args.csv:
        rows = [[args.n, " ".join(f"{u}-{v}" for u, v in t.edges)] for t in stream]
        print(_csv_text(["n", "edges"], rows), end="")
        return 0
    first = True
    for t in stream:
        if not first:
            print()
        print(serialize_tree(t), end="")
        first = False
    return 0


def _cmd_verify(args) -> int:
    if (args.theorem is None) == (args.lemma is None):
        print("verify: exactly one of --theorem/--lemma is required", file=sys.stderr)
        return 2
    if args.theorem:
        results = verify_theorem(args.theorem, n_min=args.n_min, n_max=args.n_max,
                                 jobs=args.jobs, formula_variant=args.formula_variant)
        lo, hi = DEFAULT_RANGE[args.theorem]
        header = (f"# theorem={args.theorem} n={args.n_min or lo}..{args.n_max or hi} "
                  f"jobs={args.jobs} formula={args.formula_variant}")
    else:
        results = run_lemma_suite(args.lemma, samples=args.samples, seed=args.seed)
        header = f"# lemma={args.lemma} samples={args.samples} seed={args.seed}"
    print(header)
    if args.csv:
        rows = [[r.theorem, r.n if r.n is not None else "",
                 _dump(r.constraint), r.claimed if r.claimed is not None else "",
                 r.achieved if r.achieved is not None else "",
                 "pass" if r.passed else "FAIL"] for r in results]
        print(_csv_text(["theorem", "n", "constraint", "claimed", "achieved", "result"],
                        rows), end="")
    else:
        for r in results:
            status = "pass" if r.passed else "FAIL"
            parts = [status, r.theorem]
            if r.n is not None:
                parts.append(f"n={r.n}")
            parts.append(_dump(r.constraint))
            if r.claimed is not None:
                parts.append(f"claimed={r.claimed} achieved={r.achieved}")
            if r.class_size is not None:
                parts.append(f"class={r.class_size}")
            if r.notes:
                parts.append(f"[{r.notes}]")
            print(" ".join(parts))
    failed = [r for r in results if not r.passed]
    print(f"# {len(results) - len(failed)}/{len(results)} checks passed")
    if args.json:
        with open(args.json, "w", encoding="ascii") as fh:
            json.dump([r.to_json_dict() for r in results], fh, indent=2)
            fh.write("\n")
    return 1 if failed else 0


def _cmd_profile(args) -> int:
    profile = invariant_profile(_read_tree(args.input, args.format))
    d = profile.to_json_dict()
    if args.json:
        print(_dump(d))
    elif args.csv:
        keys = list(d)
        print(_csv_text(keys, [[d[k] if k != "centers" else " ".join(map(str, d[k]))
                                for k in keys]]), end="")
    else:
        for k, v in d.items():
            print(f"{k} = {v}")
    return 0


_COMMANDS = {
    "count": _cmd_count,
    "construct": _cmd_construct,
    "transform": _cmd_transform,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "profile": _cmd_profile,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, LookupError, OSError) as exc:
        print(f"treecount {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
