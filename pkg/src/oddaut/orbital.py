"""Coset actions, orbitals and orbital-odd transitive groups.

A transitive group H on V acts on V x V; its orbits are the orbitals.  Apart
from the diagonal, each orbital gives a basic orbital (di)graph with that
orbital as arc set, undirected exactly when the orbital is self-paired.  H is
orbital-odd when some basic orbital (di)graph has an odd automorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .autsearch import DEFAULT_VERTEX_BOUND, automorphism_group
from .errors import InputError
from .graphcore import Graph
from .permcore import DEFAULT_ENUMERATION_BOUND, Permutation, PermGroup, parse_oneline

# -- coset actions -------------------------------------------------------------


@dataclass
class CosetAction:
    """Action of G on the right cosets of S, as a permutation group of degree [G:S]."""

    group: PermGroup
    representatives: list[Permutation]
    subgroup: PermGroup


def coset_action(G: PermGroup, subgroup_generators: list[Permutation],
                 bound: int = DEFAULT_ENUMERATION_BOUND) -> CosetAction:
    """Right action of ``G`` on cosets ``S*g``; coset ``i`` is ``S*representatives[i]``.

    Each coset is named by its least element in image-sequence order, so the
    numbering only depends on the inputs.
    """
    S = PermGroup(subgroup_generators, G.degree)
    if not S.is_subgroup_of(G):
        raise InputError("subgroup generators do not lie in the group")
    index, rem = divmod(G.order, S.order)
    if rem:
        raise RuntimeError("subgroup order does not divide group order")
    S_elems = list(S.elements(bound))

    def canonical(g: Permutation) -> Permutation:
        return min(s * g for s in S_elems)

    start = canonical(Permutation.identity(G.degree))
    reps = [start]
    where = {start: 0}
    images: list[list[int]] = [[] for _ in G.generators]
    i = 0
    while i < len(reps):
        for j, x in enumerate(G.generators):
            c = canonical(reps[i] * x)
            if c not in where:
                where[c] = len(reps)
                reps.append(c)
            images[j].append(where[c])
        i += 1
    if len(reps) != index:
        raise RuntimeError(f"found {len(reps)} cosets, expected {index}")
    gens = [Permutation(tuple(img)) for img in images]
    return CosetAction(PermGroup(gens, index), reps, S)


# -- orbitals ------------------------------------------------------------------


@dataclass(frozen=True)
class Orbital:
    representative_pair: tuple[int, int]
    pairs: frozenset[tuple[int, int]]
    self_paired: bool
    suborbit_length: int

    @property
    def is_diagonal(self) -> bool:
        return self.representative_pair[0] == self.representative_pair[1]


def _require_transitive(H: PermGroup) -> None:
    if not H.is_transitive():
        raise InputError("group is not transitive")


def suborbits(H: PermGroup) -> list[list[int]]:
    """Orbits of the stabilizer of point 0, ordered by least element."""
    _require_transitive(H)
    return H.point_stabilizer(0).orbits()


def orbitals(H: PermGroup) -> list[Orbital]:
    """All orbitals, the diagonal first, then by suborbit (least element)."""
    subs = suborbits(H)
    chain = H.with_base_prefix([0])
    trans = {w: chain.transversal_element(0, w) for w in range(H.degree)}
    where = {d: i for i, sub in enumerate(subs) for d in sub}
    out = []
    for sub in subs:
        pairs = frozenset((w, t(d)) for w, t in trans.items() for d in sub)
        d = sub[0]
        # (d, 0) lies in the orbital of (0, t_d^{-1}(0))
        back = trans[d].inverse()(0)
        out.append(Orbital((0, d), pairs, where[back] == where[d], len(sub)))
    return out


def paired(H: PermGroup, orbital: Orbital) -> Orbital:
    rev = {(b, a) for a, b in orbital.pairs}
    for o in orbitals(H):
        if o.pairs == rev:
            return o
    raise RuntimeError("paired orbital not found")


def basic_orbital_graph(H: PermGroup, orbital: Orbital) -> Graph:
    if orbital.is_diagonal:
        raise InputError("the diagonal orbital has no orbital graph")
    if orbital.self_paired:
        X = Graph.from_edges(H.degree, sorted((a, b) for a, b in orbital.pairs if a < b))
    else:
        X = Graph.from_edges(H.degree, sorted(orbital.pairs), directed=True)
    if not all(X.is_automorphism(g) for g in H.generators):
        raise RuntimeError("group does not act on its orbital graph")
    return X


@dataclass(frozen=True)
class OrbitalDetail:
    representative_pair: tuple[int, int]
    valency: int
    self_paired: bool
    aut_order: int
    odd: bool
    witness: Permutation | None

    def to_json(self) -> dict:
        return {"pair": list(self.representative_pair), "valency": self.valency,
                "self_paired": self.self_paired, "aut_order": self.aut_order,
                "odd": self.odd, "witness_cycles": None if self.witness is None else str(self.witness)}


@dataclass(frozen=True)
class OrbitalOddReport:
    degree: int
    suborbit_lengths: list[int]
    orbital_odd: bool
    details: list[OrbitalDetail]

    def to_json(self) -> dict:
        return {"degree": self.degree, "suborbits": self.suborbit_lengths,
                "orbital_odd": self.orbital_odd, "orbitals": [d.to_json() for d in self.details]}


def is_orbital_odd(H: PermGroup, vertex_bound: int = DEFAULT_VERTEX_BOUND) -> OrbitalOddReport:
    details = []
    obs = orbitals(H)
    for o in obs:
        if o.is_diagonal:
            continue
        X = basic_orbital_graph(H, o)
        A = automorphism_group(X, vertex_bound)
        odd = sorted(g for g in A.generators + A.strong_generators if g.is_odd())
        details.append(OrbitalDetail(o.representative_pair, o.suborbit_length, o.self_paired,
                                     A.order, bool(odd), odd[0] if odd else None))
    return OrbitalOddReport(H.degree, sorted(o.suborbit_length for o in obs),
                            any(d.odd for d in details), details)


@dataclass(frozen=True)
class CorollaryCheck:
    orbital: Orbital
    type: str
    predicted: bool
    orbital_odd: bool

    @property
    def holds(self) -> bool:
        return self.orbital_odd or not self.predicted


def corollary_check(H: PermGroup, vertex_bound: int = DEFAULT_VERTEX_BOUND) -> CorollaryCheck:
    """Use a cubic symmetric orbital graph to predict orbital-oddness, then confirm it."""
    from .oddness import cross_validate
    from .errors import NotSymmetricError
    for o in orbitals(H):
        if o.is_diagonal or not o.self_paired or o.suborbit_length != 3:
            continue
        X = basic_orbital_graph(H, o)
        if not X.is_connected():
            continue
        try:
            report = cross_validate(X, vertex_bound=vertex_bound)
        except NotSymmetricError:
            continue
        verdict = is_orbital_odd(H, vertex_bound).orbital_odd if report.predicted.exists else False
        return CorollaryCheck(o, str(report.type), report.predicted.exists, verdict)
    raise InputError("no self-paired suborbit of length 3 with a connected cubic symmetric orbital graph")


# -- group files ---------------------------------------------------------------


def parse_group_text(text: str) -> tuple[int, list[Permutation]]:
    """First non-comment line: the degree.  Every further line: one generator's images."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise InputError("empty group file")
    try:
        degree = int(lines[0])
    except ValueError as exc:
        raise InputError(f"bad degree line {lines[0]!r}") from exc
    gens = []
    for ln in lines[1:]:
        p = parse_oneline(f"{degree}: {ln}") if ":" not in ln else parse_oneline(ln)
        if p.degree != degree:
            raise InputError(f"generator of degree {p.degree}, expected {degree}")
        gens.append(p)
    if not gens:
        gens = [Permutation.identity(degree)]
    return degree, gens


def read_group_file(path: str | Path) -> tuple[int, list[Permutation]]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc}") from exc
    return parse_group_text(text)


def format_group_text(degree: int, generators: list[Permutation]) -> str:
    return "\n".join([str(degree)] + [" ".join(map(str, g.images)) for g in generators]) + "\n"
