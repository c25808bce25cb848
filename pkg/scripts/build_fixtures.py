"""Regenerate the bundled fixture corpus in src/oddaut/data/corpus.

Registry graphs are written under their names.  Coset graphs of PSL(2, p) and
PGL(2, p) are added when new up to isomorphism; the ones matching census
graphs by order and type get census names, the rest are named after their
construction.  Run from the repository root:

    python scripts/build_fixtures.py
"""

from __future__ import annotations

import sys
from pathlib import Path

from oddaut.autsearch import are_isomorphic
from oddaut.constructors import hex_torus, named, symmetric_haar
from oddaut.graphio import write_graph
from oddaut.groupgraphs import (cubic_coset_graphs, dihedral_subgroups, projective_line_group,
                                psl33_with_polarity, s4_subgroups)
from oddaut.oddness import cross_validate
from oddaut.permcore import PermGroup

OUT = Path(__file__).resolve().parents[1] / "src" / "oddaut" / "data" / "corpus"
MAX_ORDER = 512

REGISTRY = ["F004A", "F006A", "F008A", "F010A", "F014A", "F016A", "F018A", "F020A", "F020B",
            "F024A", "F026A", "F028A", "F030A", "F032A", "F038A", "F042A", "F048A", "F062A",
            "F074A", "F086A", "F090A"]

# (order, type) -> census name, for group-built graphs
CENSUS = {(102, "{4^1}"): "F102A", (110, "{3}"): "F110A", (182, "{3}"): "F182D",
          (234, "{4^2,5}"): "F234B", (506, "{3}"): "F506A"}


def subgroup_candidates(G):
    order3 = [g for g in sorted(G.elements()) if g.order == 3][:2]
    yield from (("z3", [g]) for g in order3)
    yield from (("s3", list(x)) for x in dihedral_subgroups(G, 3))
    yield from (("d12", list(x)) for x in dihedral_subgroups(G, 6))
    yield from (("s4", list(x)) for x in s4_subgroups(G, 4))


def s4xz2_candidates(G):
    invs = [g for g in sorted(G.elements()) if g.order == 2]
    for a, b in s4_subgroups(G, 30):
        S = PermGroup([a, b], G.degree)
        for z in invs:
            if z * a == a * z and z * b == b * z and not S.contains(z):
                yield ("s4xz2", [a, b, z])
                break


def main() -> int:
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.g6"):
        old.unlink()
    kept: list = []

    def add(name, X):
        if X.n > MAX_ORDER or any(Y.n == X.n and are_isomorphic(X, Y) is not None for _, Y in kept):
            return False
        kept.append((name, X))
        return True

    for name in REGISTRY:
        add(name, named(name))
    for b in (5, 6, 7):
        add(f"hex-torus-{b}", hex_torus(b))
    for n in (39, 49, 57, 61):
        add(f"haar-{n}", symmetric_haar(n))

    groups = [(f"{'psl' if sp else 'pgl'}2-{p}", projective_line_group(p, sp))
              for p in (5, 7, 11, 13, 17, 23) for sp in (True, False)]
    for gname, G in groups:
        tally: dict = {}
        for kind, gens in subgroup_candidates(G):
            for c in cubic_coset_graphs(G, gens):
                n = c.graph.n
                k = tally.get((kind, n), 0)
                if add(f"{gname}-{kind}-{n}{'abcdefghijklmnop'[k]}", c.graph):
                    tally[(kind, n)] = k + 1
        print(gname, len(kept), file=sys.stderr)
    G = psl33_with_polarity()
    for kind, gens in s4xz2_candidates(G):
        graphs = [c.graph for c in cubic_coset_graphs(G, gens) if c.graph.n == 234]
        if graphs:
            add("psl3-3-s4xz2-234", graphs[0])
            break

    for name, X in kept:
        report = cross_validate(X)
        final = CENSUS.get((X.n, str(report.type)), name) if not name.startswith("F") else name
        write_graph(X, OUT / f"{final}.g6")
        print(f"{final:24s} {X.n:4d} {str(report.type):16s} agree={report.agree}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
