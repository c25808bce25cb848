"""Command-line interface.

Exit codes: 0 success, 1 input error, 2 resource bound exceeded, 3 the direct
and predicted verdicts disagree (or computed invariants contradict the
classification).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .constructors import generalized_petersen, haar_graph, hex_torus, lcf, named
from .errors import ClassificationError, InputError, ResourceBoundError
from .graphio import format_edge_list, parse_edge_list, parse_graph6, read_graph, to_graph6
from .pipeline import AnalysisOptions, analyze, batch

EXIT_OK, EXIT_INPUT, EXIT_BOUND, EXIT_DISAGREE = 0, 1, 2, 3


def dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2)


def dump_line(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def _options(args) -> AnalysisOptions:
    return AnalysisOptions(rigid=False if args.skip_rigid else None,
                           max_group_order=args.max_group_order, timing=args.timing)


def _load(path: str, fmt: str | None):
    if fmt is None:
        return read_graph(path)
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc}") from exc
    return parse_graph6(text.strip()) if fmt == "g6" else parse_edge_list(text)


def cmd_analyze(args) -> int:
    if (args.path is None) == (args.named is None):
        raise InputError("give exactly one of a graph file or --named")
    if args.named is not None:
        X, gid = named(args.named), args.named
    else:
        X, gid = _load(args.path, args.format), Path(args.path).stem
    doc = analyze(X, gid, _options(args))
    print(dump(doc))
    return EXIT_OK if doc["agree"] else EXIT_DISAGREE


def cmd_batch(args) -> int:
    if args.jobs < 1:
        raise InputError("--jobs must be at least 1")
    docs, summary = batch(args.directory, _options(args), args.jobs)
    lines = "".join(dump_line(d) + "\n" for d in docs)
    if args.report:
        Path(args.report).write_text(lines)
    else:
        sys.stdout.write(lines)
    print(dump_line({"summary": summary}))
    return EXIT_DISAGREE if summary["disagree"] else EXIT_OK


def cmd_orbital(args) -> int:
    from .orbital import coset_action, corollary_check, is_orbital_odd, read_group_file
    from .permcore import PermGroup
    degree, gens = read_group_file(args.group)
    G = PermGroup(gens, degree)
    if args.subgroup:
        sdeg, sgens = read_group_file(args.subgroup)
        if sdeg != degree:
            raise InputError("group and subgroup files have different degrees")
        H = coset_action(G, sgens, args.max_group_order).group
    else:
        H = G
    doc = is_orbital_odd(H).to_json()
    try:
        c = corollary_check(H)
        doc["cubic_orbital"] = {"pair": list(c.orbital.representative_pair), "type": c.type,
                                "predicted_odd": c.predicted, "holds": c.holds}
    except InputError:
        doc["cubic_orbital"] = None
    print(dump(doc))
    return EXIT_OK


def cmd_construct(args) -> int:
    kind, params = args.kind, args.params
    try:
        if kind == "gp":
            n, k = map(int, params)
            X = generalized_petersen(n, k)
        elif kind == "lcf":
            (code,) = params
            X = lcf(code)
        elif kind == "named":
            (name,) = params
            X = named(name)
        elif kind == "haar":
            n, *symbol = map(int, params)
            X = haar_graph(n, symbol)
        elif kind == "hex":
            (b,) = map(int, params)
            X = hex_torus(b)
        else:
            raise InputError(f"unknown construction {kind!r}")
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad parameters for {kind}: {params}") from exc
    text = to_graph6(X) + "\n" if args.format == "g6" else format_edge_list(X)
    back = parse_graph6(text.strip()) if args.format == "g6" else parse_edge_list(text)
    if back != X:
        raise RuntimeError("constructed graph does not round-trip")
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oddaut", description="Odd automorphisms of cubic symmetric graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def analysis_flags(p):
        p.add_argument("--skip-rigid", action="store_true",
                       help="skip the rigid-cell sweep (default: run it when |Aut| <= 1000)")
        p.add_argument("--max-group-order", type=int, default=10**6,
                       help="largest group that may be enumerated element by element")
        p.add_argument("--timing", action="store_true", help="add wall-clock seconds to the output")

    p = sub.add_parser("analyze", help="analyze one graph")
    p.add_argument("path", nargs="?")
    p.add_argument("--named")
    p.add_argument("--format", choices=("g6", "edges"))
    analysis_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("batch", help="cross-validate every graph in a directory")
    p.add_argument("directory")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report")
    analysis_flags(p)
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("orbital", help="orbital-odd test for a transitive group")
    p.add_argument("group")
    p.add_argument("subgroup", nargs="?")
    p.add_argument("--degree-action", action="store_true",
                   help="use the group's own action (the default when no subgroup is given)")
    p.add_argument("--max-group-order", type=int, default=10**6)
    p.set_defaults(func=cmd_orbital)

    p = sub.add_parser("construct", help="write a graph file")
    p.add_argument("kind", choices=("gp", "lcf", "named", "haar", "hex"))
    p.add_argument("params", nargs="*")
    p.add_argument("--out")
    p.add_argument("--format", choices=("g6", "edges"), default="g6")
    p.set_defaults(func=cmd_construct)
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceBoundError as exc:
        print(f"resource bound: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except ClassificationError as exc:
        print(f"classification inconsistency: {exc}", file=sys.stderr)
        return EXIT_DISAGREE


if __name__ == "__main__":
    sys.exit(main())
