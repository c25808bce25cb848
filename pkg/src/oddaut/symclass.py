"""Classification of cubic symmetric graphs.

A connected cubic graph X with arc-transitive group G = Aut(X) is s-regular
for a unique s in 1..5, and then |G| = 3 * 2^(s-1) * |V(X)|.  Arc-transitive
subgroups are s'-regular for some s' <= s, and at levels 2 and 4 they come in
two flavours: subtype 1 contains an involution reversing an edge, subtype 2
does not.  The type of X collects the levels (with subtypes) realized by
arc-transitive subgroups; only 17 types occur.

Type determination sweeps over pairs (H, a).  Fix an arc (u, v).  For every
subgroup H of G_u of order 3 * 2^(s'-1) and every a in G with a(u) = v and
a(v) = u, form K = <H, a> and keep it when |K| = 3 * 2^(s'-1) * |V(X)| and K
is arc-transitive.

Completeness: let K <= G be s'-regular.  Then K_u <= G_u has order
3 * 2^(s'-1), and K, being arc-transitive, holds an element a swapping u and
v.  The subgroup <K_u, a> contains K_u and is transitive on V(X) (K_u moves v
to every neighbour of u, a moves u to v, so connectivity spreads the orbit),
and its vertex stabilizer contains K_u, so its order is at least |K|; being
inside K it equals K.  The pair (K_u, a) is therefore visited and K is found.
Conversely every kept K has a vertex stabilizer of order exactly |H| that is
transitive on N(u), so K is s'-regular.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import ClassificationError, InputError, NotArcTransitiveError, NotSymmetricError
from .graphcore import Graph, girth, is_bipartite
from .permcore import GroupFingerprint, Permutation, PermGroup

# -- type labels ---------------------------------------------------------------

LEVEL_TOKENS = ("1", "2^1", "2^2", "3", "4^1", "4^2", "5")

# canonical label -> (s, bipartite: True always / False never / None sometimes)
TYPE_TABLE: dict[str, tuple[int, bool | None]] = {
    "{1}": (1, None),
    "{1,2^1}": (2, None),
    "{2^1}": (2, None),
    "{2^2}": (2, None),
    "{1,2^1,2^2,3}": (3, True),
    "{2^1,2^2,3}": (3, True),
    "{2^1,3}": (3, False),
    "{2^2,3}": (3, False),
    "{3}": (3, None),
    "{1,4^1}": (4, True),
    "{4^1}": (4, None),
    "{4^2}": (4, None),
    "{1,4^1,4^2,5}": (5, True),
    "{4^1,4^2,5}": (5, True),
    "{4^1,5}": (5, False),
    "{4^2,5}": (5, False),
    "{5}": (5, None),
}


def _token(level: int, subtype: int | None) -> str:
    return f"{level}^{subtype}" if subtype else str(level)


@dataclass(frozen=True)
class TypeLabel:
    """One of the 17 admissible type sets, e.g. ``{1,2^1}``."""

    members: frozenset[str]

    def __post_init__(self):
        if str(self) not in TYPE_TABLE:
            raise InputError(f"{str(self)} is not an admissible type")

    @classmethod
    def parse(cls, text: str) -> "TypeLabel":
        body = text.strip().replace(" ", "").replace("¹", "^1").replace("²", "^2")
        if not (body.startswith("{") and body.endswith("}")):
            raise InputError(f"cannot parse type label {text!r}")
        parts = [p for p in body[1:-1].split(",") if p]
        if any(p not in LEVEL_TOKENS for p in parts):
            raise InputError(f"unknown level token in {text!r}")
        return cls(frozenset(parts))

    @property
    def s(self) -> int:
        return TYPE_TABLE[str(self)][0]

    @property
    def bipartite_rule(self) -> bool | None:
        return TYPE_TABLE[str(self)][1]

    def __str__(self) -> str:
        return "{" + ",".join(t for t in LEVEL_TOKENS if t in self.members) + "}"


ALL_TYPES = tuple(TypeLabel.parse(t) for t in TYPE_TABLE)


# -- s-level -------------------------------------------------------------------


def _require_cubic_connected(X: Graph) -> None:
    if X.directed or not X.is_cubic() or not X.is_connected():
        raise NotSymmetricError("graph must be undirected, cubic and connected")


def _first_s_arc(X: Graph, s: int) -> list[int]:
    arc = [0, X.neighbors(0)[0]]
    while len(arc) < s + 1:
        arc.append(min(w for w in X.neighbors(arc[-1]) if w != arc[-2]))
    return arc


def check_arc_transitive(X: Graph, G: PermGroup) -> None:
    _require_cubic_connected(X)
    if not G.is_transitive():
        raise NotSymmetricError("automorphism group is not vertex-transitive")
    nbrs = set(X.neighbors(0))
    if not nbrs <= set(G.point_stabilizer(0).orbit(X.neighbors(0)[0])):
        raise NotArcTransitiveError("graph is vertex-transitive but not arc-transitive")


def arc_regularity_level(X: Graph, G: PermGroup) -> int:
    """The s for which ``G`` acts regularly on the s-arcs of ``X``."""
    check_arc_transitive(X, G)
    q, r = divmod(G.order, 3 * X.n)
    if r or q not in (1, 2, 4, 8, 16):
        raise NotSymmetricError(f"|Aut| = {G.order} does not fit 3 * 2^(s-1) * {X.n}")
    s = q.bit_length()
    # |G| equals the number of s-arcs, so a trivial s-arc stabilizer means regularity
    if not G.pointwise_stabilizer(_first_s_arc(X, s)).is_trivial():
        raise NotSymmetricError("s-arc stabilizer is not trivial")
    return s


# -- Table 2 -------------------------------------------------------------------


def _perm(cycles, degree):
    return Permutation.from_cycles(cycles, degree)


def metacyclic_regular(u: int, m: int = 8) -> PermGroup:
    """Regular representation of <r, x | r^m = x^2 = 1, x r x = r^u>.

    Elements r^i x^e are listed as ``i + m*e``; they multiply by
    ``(i, e)(j, f) = (i + u^e j, e + f)``.  With m = 8, u = 7 gives D16 and
    u = 3 gives QD16.
    """
    elems = [(i, e) for e in (0, 1) for i in range(m)]
    index = {x: k for k, x in enumerate(elems)}

    def mul(a, b):
        (i, e), (j, f) = a, b
        return ((i + (u if e else 1) * j) % m, e ^ f)

    gens = [(1, 0), (0, 1)]
    return PermGroup([Permutation._unchecked(tuple(index[mul(x, g)] for x in elems))
                      for g in gens], 2 * m)


def _affine_z8(units) -> PermGroup:
    gens = [Permutation._unchecked(tuple((t + 1) % 8 for t in range(8)))]
    gens += [Permutation._unchecked(tuple((u * t) % 8 for t in range(8))) for u in units]
    return PermGroup(gens, 8)


@lru_cache(maxsize=None)
def reference_groups() -> dict[str, PermGroup]:
    """Concrete permutation realizations of every Table 2 entry."""
    return {
        "Z3": PermGroup([_perm([(0, 1, 2)], 3)]),
        "S3": PermGroup([_perm([(0, 1, 2)], 3), _perm([(0, 1)], 3)]),
        "S3xZ2": PermGroup([_perm([(0, 1, 2)], 5), _perm([(0, 1)], 5), _perm([(3, 4)], 5)]),
        "S4": PermGroup([_perm([(0, 1, 2, 3)], 4), _perm([(0, 1)], 4)]),
        "S4xZ2": PermGroup([_perm([(0, 1, 2, 3)], 6), _perm([(0, 1)], 6), _perm([(4, 5)], 6)]),
        "trivial": PermGroup([], 1),
        "Z2": PermGroup([_perm([(0, 1)], 2)]),
        "Z2^2": PermGroup([_perm([(0, 1)], 4), _perm([(2, 3)], 4)]),
        "Z4": PermGroup([_perm([(0, 1, 2, 3)], 4)]),
        "D8": PermGroup([_perm([(0, 1, 2, 3)], 4), _perm([(0, 2)], 4)]),
        "D16": metacyclic_regular(7),
        "QD16": metacyclic_regular(3),
        "(D8xZ2):Z2": _affine_z8([3, 5, 7]),
    }


# Table 2 rows.  The edge stabilizer is the setwise stabilizer of an edge, so
# for s = 1 it has order 2 (generated by the edge-reversing involution).
TABLE2: dict[int, tuple[str, tuple[str, ...]]] = {
    1: ("Z3", ("Z2",)),
    2: ("S3", ("Z2^2", "Z4")),
    3: ("S3xZ2", ("D8",)),
    4: ("S4", ("D16", "QD16")),
    5: ("S4xZ2", ("(D8xZ2):Z2",)),
}


@lru_cache(maxsize=None)
def _reference_keys() -> dict[tuple, str]:
    return {g.fingerprint().key(): name for name, g in reference_groups().items()}


def identify(fp: GroupFingerprint) -> str | None:
    """Name of the reference group with this fingerprint, if any."""
    return _reference_keys().get(fp.key())


@dataclass(frozen=True)
class StabilizerStructure:
    vertex_label: str
    edge_label: str
    vertex_fingerprint: GroupFingerprint = field(compare=False, repr=False)
    edge_fingerprint: GroupFingerprint = field(compare=False, repr=False)


def stabilizer_structures(X: Graph, G: PermGroup, s: int) -> StabilizerStructure:
    u = 0
    v = X.neighbors(u)[0]
    fv = G.point_stabilizer(u).fingerprint()
    fe = G.setwise_pair_stabilizer(u, v).fingerprint()
    vl, el = identify(fv), identify(fe)
    row = TABLE2.get(s)
    if row is None or vl != row[0] or el not in row[1]:
        raise ClassificationError(
            f"stabilizers (vertex {vl or fv.order}, edge {el or fe.order}) match no row for s={s}")
    return StabilizerStructure(vl, el, fv, fe)


# -- regular subgroups ---------------------------------------------------------


@dataclass(frozen=True)
class RegularSubgroupRecord:
    level: int
    subtype: int | None
    group: PermGroup = field(compare=False)
    arc_reverser: Permutation

    @property
    def token(self) -> str:
        return _token(self.level, self.subtype)


def _subgroups_of_order(elements: list[Permutation], order: int) -> list[list[Permutation]]:
    """All subgroups of the given order of the finite group listed in ``elements``."""
    index = {g: i for i, g in enumerate(elements)}
    mul = [[index[a * b] for b in elements] for a in elements]

    def close(seed: frozenset) -> frozenset:
        out = set(seed)
        frontier = list(seed)
        while frontier:
            x = frontier.pop()
            for y in list(out):
                for z in (mul[x][y], mul[y][x]):
                    if z not in out:
                        out.add(z)
                        frontier.append(z)
        return frozenset(out)

    ident = next(i for i, g in enumerate(elements) if g.is_identity())
    cyclic = {close(frozenset({ident, i})) for i in range(len(elements))}
    found = set(cyclic)
    frontier = list(cyclic)
    while frontier:
        nxt = []
        for A in frontier:
            for C in cyclic:
                if C <= A:
                    continue
                J = close(A | C)
                if J not in found:
                    found.add(J)
                    nxt.append(J)
        frontier = nxt
    subs = sorted((sorted(S) for S in found if len(S) == order))
    return [[elements[i] for i in S] for S in subs]


def _edge_swappers(G: PermGroup, Gu: list[Permutation], u: int, v: int) -> list[Permutation]:
    t = G.element_mapping(u, v)
    return sorted(x for x in (h * t for h in Gu) if x(v) == u)


def find_regular_subgroups(X: Graph, G: PermGroup, level: int) -> list[RegularSubgroupRecord]:
    """Every ``level``-regular subgroup of ``G``, once each (see the module notes)."""
    _require_cubic_connected(X)
    if not 1 <= level <= 5:
        raise InputError("level must lie in 1..5")
    u = 0
    v = X.neighbors(u)[0]
    nbrs = set(X.neighbors(u))
    Gu = sorted(G.point_stabilizer(u).elements())
    stab_order = 3 * 2 ** (level - 1)
    target = stab_order * X.n
    if G.order % target:
        return []
    swappers = _edge_swappers(G, Gu, u, v)
    records = []
    for H in _subgroups_of_order(Gu, stab_order):
        if not nbrs <= {h(v) for h in H}:
            continue
        gens_H = [h for h in H if not h.is_identity()]
        found: list[PermGroup] = []
        for a in swappers:
            if any(K.contains(a) for K in found):
                continue
            K = PermGroup.bounded(gens_H + [a], X.n, target)
            if K is None or K.order != target or not K.is_transitive():
                continue
            found.append(K)
            H_uv = [h for h in H if h(v) == v]
            flips = sorted(h * a for h in H_uv)
            involutions = [f for f in flips if f.order == 2]
            subtype = None
            if level in (2, 4):
                subtype = 1 if involutions else 2
            reverser = involutions[0] if involutions else flips[0]
            records.append(RegularSubgroupRecord(level, subtype, K, reverser))
    records.sort(key=lambda r: (r.subtype or 0, r.arc_reverser))
    return records


# -- type ----------------------------------------------------------------------


@dataclass
class TypeEvidence:
    label: TypeLabel
    s: int
    bipartite: bool
    records: dict[int, list[RegularSubgroupRecord]]


def type_from_records(s: int, records: dict[int, list[RegularSubgroupRecord]]) -> TypeLabel:
    tokens = {r.token for rs in records.values() for r in rs}
    text = "{" + ",".join(t for t in LEVEL_TOKENS if t in tokens) + "}"
    if text not in TYPE_TABLE or TYPE_TABLE[text][0] != s:
        raise ClassificationError(f"computed type {text} is not admissible for s={s}")
    return TypeLabel(frozenset(tokens))


def type_label(X: Graph, G: PermGroup | None = None, s: int | None = None) -> TypeEvidence:
    if G is None:
        from .autsearch import automorphism_group
        G = automorphism_group(X)
    if s is None:
        s = arc_regularity_level(X, G)
    records = {lv: find_regular_subgroups(X, G, lv) for lv in range(1, s + 1)}
    label = type_from_records(s, records)
    bip = is_bipartite(X) is not None
    rule = label.bipartite_rule
    if rule is not None and rule != bip:
        raise ClassificationError(
            f"type {label} requires bipartite={rule}, graph has bipartite={bip}")
    return TypeEvidence(label, s, bip, records)


def girth_type_check(X: Graph, label: TypeLabel | str) -> bool:
    """True when the girth rule for types {2^2} and {4^2} is violated."""
    if isinstance(label, str):
        label = TypeLabel.parse(label)
    if str(label) in ("{2^2}", "{4^2}"):
        return not girth(X) > 9
    return False
