"""Cubic symmetric graphs built from group actions.

A transitive group G with point stabilizer H gives cubic arc-transitive
graphs through its self-paired suborbits of length 3 (orbital graphs of the
action on the cosets of H).  This module supplies the groups needed for a few
census graphs that have no short LCF description:

* PSL(2, p) and PGL(2, p) on the projective line over GF(p);
* PSL(3, 3) extended by a polarity, acting on the 13 points and 13 lines of
  the projective plane over GF(3).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .autsearch import are_isomorphic
from .errors import InputError
from .graphcore import Graph
from .orbital import basic_orbital_graph, coset_action, orbitals
from .permcore import Permutation, PermGroup


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def _primitive_root(p: int) -> int:
    phi = p - 1
    factors = {d for d in range(2, phi + 1) if phi % d == 0 and _is_prime(d)}
    return next(g for g in range(2, p) if all(pow(g, phi // f, p) != 1 for f in factors))


def projective_line_group(p: int, special: bool) -> PermGroup:
    """PSL(2, p) (``special``) or PGL(2, p) on GF(p) plus infinity (point ``p``)."""
    if not _is_prime(p) or p < 5:
        raise InputError("p must be a prime >= 5")
    inf = p

    def mobius(a, b, c, d):
        images = []
        for x in range(p + 1):
            if x == inf:
                num, den = a, c
            else:
                num, den = (a * x + b) % p, (c * x + d) % p
            images.append(inf if den == 0 else num * pow(den, -1, p) % p)
        return Permutation(tuple(images))

    g = _primitive_root(p)
    mult = g * g % p if special else g
    return PermGroup([mobius(1, 1, 0, 1), mobius(mult, 0, 0, 1), mobius(0, p - 1, 1, 0)], p + 1)


def _pg23_points() -> list[tuple[int, int, int]]:
    pts = []
    for v in product(range(3), repeat=3):
        if any(v):
            lead = next(x for x in v if x)
            if lead == 1:
                pts.append(v)
    return pts


def psl33_with_polarity() -> PermGroup:
    """PSL(3, 3) with the standard polarity adjoined, on points ``0..12`` and lines ``13..25``.

    Line ``13 + i`` has the coordinates of point ``i``; the polarity swaps
    point ``i`` and line ``13 + i``.
    """
    pts = _pg23_points()
    index = {v: i for i, v in enumerate(pts)}

    def norm(v):
        lead = next(x for x in v if x)
        inv = 1 if lead == 1 else 2
        return tuple(x * inv % 3 for x in v)

    def apply(M, v):
        return norm(tuple(sum(M[r][c] * v[c] for c in range(3)) % 3 for r in range(3)))

    def inverse_transpose(M):
        # over GF(3) with det 1, M^-T is the cofactor matrix
        cof = [[0] * 3 for _ in range(3)]
        for r in range(3):
            for c in range(3):
                rows = [i for i in range(3) if i != r]
                cols = [j for j in range(3) if j != c]
                minor = M[rows[0]][cols[0]] * M[rows[1]][cols[1]] - M[rows[0]][cols[1]] * M[rows[1]][cols[0]]
                cof[r][c] = (-1) ** (r + c) * minor % 3
        return cof

    def perm(M):
        Mt = inverse_transpose(M)
        img = [index[apply(M, v)] for v in pts] + [13 + index[apply(Mt, v)] for v in pts]
        return Permutation(tuple(img))

    gens = [perm([[1, 1, 0], [0, 1, 0], [0, 0, 1]]),
            perm([[0, 0, 1], [1, 0, 0], [0, 1, 0]]),
            perm([[1, 0, 0], [0, 2, 0], [0, 0, 2]]),
            perm([[1, 0, 0], [1, 1, 0], [0, 0, 1]])]
    polarity = Permutation(tuple(list(range(13, 26)) + list(range(13))))
    return PermGroup(gens + [polarity], 26)


@dataclass(frozen=True)
class CosetGraph:
    graph: Graph
    subgroup_generators: tuple[Permutation, ...]
    action: PermGroup


def cubic_coset_graphs(G: PermGroup, subgroup_generators: list[Permutation]) -> list[CosetGraph]:
    """Connected cubic orbital graphs of G acting on the cosets of the given subgroup."""
    action = coset_action(G, subgroup_generators).group
    out = []
    for o in orbitals(action):
        if o.is_diagonal or not o.self_paired or o.suborbit_length != 3:
            continue
        X = basic_orbital_graph(action, o)
        if X.is_connected():
            out.append(CosetGraph(X, tuple(subgroup_generators), action))
    return out


def _elements_by_order(G: PermGroup) -> dict[int, list[Permutation]]:
    out: dict[int, list[Permutation]] = {}
    for g in sorted(G.elements()):
        out.setdefault(g.order, []).append(g)
    return out


def dihedral_subgroups(G: PermGroup, half: int, rotations: int = 2):
    """Generators ``(r, t)`` of the dihedral subgroups of order ``2*half`` through
    the first ``rotations`` elements of order ``half``."""
    by = _elements_by_order(G)
    seen: list[PermGroup] = []
    for r in by.get(half, [])[:rotations]:
        rinv = r.inverse()
        for t in by.get(2, []):
            if t * r * t == rinv:
                D = PermGroup([r, t], G.degree)
                if D.order == 2 * half and not any(D.same_group(E) for E in seen):
                    seen.append(D)
                    yield (r, t)


def s4_subgroups(G: PermGroup, limit: int = 50):
    """Generators ``(a, b)`` with a^4 = b^3 = (ab)^2 = 1 generating a group of order 24."""
    by = _elements_by_order(G)
    seen = []
    for a in by.get(4, []):
        for b in by.get(3, []):
            if (a * b).order == 2:
                S = PermGroup([a, b], G.degree)
                if S.order == 24 and not any(S.same_group(E) for E in seen):
                    seen.append(S)
                    yield (a, b)
                    if len(seen) >= limit:
                        return
                break


def distinct_graphs(graphs: list[Graph]) -> list[Graph]:
    out: list[Graph] = []
    for X in graphs:
        if not any(Y.n == X.n and are_isomorphic(X, Y) is not None for Y in out):
            out.append(X)
    return out
