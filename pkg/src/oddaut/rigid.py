"""Fixed points of automorphisms of cubic symmetric graphs.

The rigid subgraph of an automorphism is the subgraph induced on its fixed
vertices; its components are the rigid cells.  In an s-regular cubic graph
the possible cells are small trees whose shape depends on s and on the order
of the automorphism.  This module extracts the cells, judges them against the
legality table below, finds canonical involutions and profiles the orbits of
an element of order 2 or 4.

Legality, for an automorphism fixing at least one vertex:

* order 3 or 6: single vertices only;
* order 4: I-trees only;
* involutions: none at all for s = 1; I-trees for s = 2; I- and Y-trees for
  s = 3, both kinds together only in type {3}; H-trees for s = 4; H- and
  A-trees for s = 5, both together only in type {5};
* B-trees and anything that is not one of the templates: never.

Other element orders carry no claim.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import InputError
from .graphcore import Graph, QuotientGraph, TreeShape, classify_tree_shape, induced_subgraph, quotient
from .permcore import Permutation, PermGroup

VERTEX, I, Y, H, A, B, OTHER = (TreeShape.VERTEX, TreeShape.I, TreeShape.Y, TreeShape.H,
                                TreeShape.A, TreeShape.B, TreeShape.OTHER)


def fixed_set(X: Graph, alpha: Permutation) -> list[int]:
    if not X.is_automorphism(alpha):
        raise InputError("permutation is not an automorphism of the graph")
    return alpha.fixed_points()


def legal_shapes(s: int, order: int) -> frozenset[TreeShape] | None:
    """Shapes allowed for rigid cells, or None when no claim is made."""
    if order in (3, 6):
        return frozenset({VERTEX})
    if order == 4:
        return frozenset({I})
    if order == 2:
        return {1: frozenset(), 2: frozenset({I}), 3: frozenset({I, Y}),
                4: frozenset({H}), 5: frozenset({H, A})}[s]
    return None


def _mixed_allowed(s: int, type_label: str | None) -> bool:
    if type_label is None:
        return True
    return (s, type_label) in ((3, "{3}"), (5, "{5}"))


@dataclass(frozen=True)
class RigidCellReport:
    automorphism: Permutation
    fixed_count: int
    cells: tuple[tuple[tuple[int, ...], TreeShape], ...]
    all_templates_legal: bool
    applicable: bool
    violations: tuple[str, ...]

    @property
    def shapes(self) -> Counter:
        return Counter(shape for _, shape in self.cells)

    def to_json(self) -> dict:
        return {"automorphism": str(self.automorphism), "fixed_count": self.fixed_count,
                "cells": [{"vertices": list(v), "shape": shape.value} for v, shape in self.cells],
                "legal": self.all_templates_legal}


def rigid_cells(X: Graph, alpha: Permutation, s: int, type_label: str | None = None) -> RigidCellReport:
    """Cells of ``X[Fix(alpha)]`` with their shapes and a legality verdict.

    ``type_label`` enables the rule restricting mixed cells to types {3} and
    {5}; without it mixed cells are not flagged.
    """
    if not 1 <= s <= 5:
        raise InputError("s must lie in 1..5")
    fix = fixed_set(X, alpha)
    if not fix:
        raise InputError("automorphism has no fixed vertex")
    sub, labels = induced_subgraph(X, fix)
    cells = []
    for comp in sub.components():
        shape = classify_tree_shape(induced_subgraph(sub, comp)[0])
        cells.append((tuple(labels[i] for i in comp), shape))
    cells.sort()
    allowed = legal_shapes(s, alpha.order)
    violations = []
    for verts, shape in cells:
        if shape in (B, OTHER):
            violations.append(f"{shape.value} cell at {verts[0]}")
        elif allowed is not None and shape not in allowed:
            violations.append(f"{shape.value} cell at {verts[0]} not allowed for s={s}, order {alpha.order}")
    if alpha.order == 2 and s in (3, 5):
        kinds = {shape for _, shape in cells}
        if len(kinds & (allowed or frozenset())) == 2 and not _mixed_allowed(s, type_label):
            violations.append(f"mixed cells outside type {{{s}}}")
    return RigidCellReport(alpha, len(fix), tuple(cells), not violations, allowed is not None,
                           tuple(violations))


def anchor_tree(X: Graph, s: int, anchor) -> list[int]:
    """Vertices of I(u,v) (s=2), Y(v) (s=3), H(u,v) (s=4) or A(v) (s=5)."""
    if s in (2, 4):
        if isinstance(anchor, int) or len(anchor) != 2 or not X.has_edge(*anchor):
            raise InputError(f"s={s} needs an edge anchor")
        u, v = anchor
        if s == 2:
            return sorted({u, v})
        return sorted({u, v, *X.neighbors(u), *X.neighbors(v)})
    if s in (3, 5):
        if not isinstance(anchor, int):
            raise InputError(f"s={s} needs a vertex anchor")
        ball = {anchor, *X.neighbors(anchor)}
        if s == 5:
            ball |= {w for x in X.neighbors(anchor) for w in X.neighbors(x)}
        return sorted(ball)
    raise InputError("canonical involutions exist for s in 2..5")


def canonical_involution(X: Graph, G: PermGroup, s: int, anchor) -> Permutation | None:
    """Least involution fixing the anchor's tree pointwise, if any."""
    tree = anchor_tree(X, s, anchor)
    stab = G.pointwise_stabilizer(tree)
    invs = sorted(g for g in stab.elements() if g.order == 2)
    return invs[0] if invs else None


@dataclass(frozen=True)
class OrbitTypeProfile:
    generator: Permutation
    type1_count: int
    type2_count: int
    type3_count: int
    fixed_points: tuple[int, ...]
    other_orbits: dict[int, int]
    quotient: QuotientGraph


def orbit_type_profile(X: Graph, a: Permutation) -> OrbitTypeProfile:
    """Orbits of <a>: length 2 with an inner edge (type 1) or without (type 2), length 4 (type 3).

    Orbits of other lengths are tallied in ``other_orbits``.
    """
    if not X.is_automorphism(a):
        raise InputError("permutation is not an automorphism of the graph")
    orbits = a.cycles(include_fixed=True)
    t1 = t2 = t3 = 0
    fixed = []
    other: Counter = Counter()
    for orb in orbits:
        if len(orb) == 1:
            fixed.append(orb[0])
        elif len(orb) == 2:
            if X.has_edge(*orb):
                t1 += 1
            else:
                t2 += 1
        elif len(orb) == 4:
            t3 += 1
        else:
            other[len(orb)] += 1
    return OrbitTypeProfile(a, t1, t2, t3, tuple(fixed), dict(sorted(other.items())),
                            quotient(X, orbits))
