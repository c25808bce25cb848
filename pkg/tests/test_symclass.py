import pytest

from conftest import aut, graph, level
from oddaut.constructors import cycle_graph, prism
from oddaut.autsearch import automorphism_group
from oddaut.errors import ClassificationError, InputError, NotArcTransitiveError, NotSymmetricError
from oddaut.graphcore import is_bipartite
from oddaut.permcore import PermGroup
from oddaut.symclass import (ALL_TYPES, TABLE2, TYPE_TABLE, TypeLabel, arc_regularity_level,
                             find_regular_subgroups, girth_type_check, identify, metacyclic_regular,
                             stabilizer_structures, type_from_records, type_label)
from oracles import closure_order, s_arc_orbit_count

GOLDEN_TYPES = {
    "F004A": "{1,2^1}", "F006A": "{1,2^1,2^2,3}", "F008A": "{1,2^1}", "F010A": "{2^1,3}",
    "F014A": "{1,4^1}", "F016A": "{1,2^1}", "F018A": "{1,2^1,2^2,3}", "F020A": "{1,2^1}",
    "F020B": "{2^1,2^2,3}", "F024A": "{1,2^1}", "F026A": "{1}", "F028A": "{2^2,3}",
    "F030A": "{4^1,4^2,5}", "F032A": "{1,2^1}",
}


def test_type_table_has_the_17_admissible_types():
    assert len(TYPE_TABLE) == len(ALL_TYPES) == 17
    for t in ALL_TYPES:
        assert max(int(m[0]) for m in t.members) == t.s
        assert TypeLabel.parse(str(t)) == t


def test_type_label_parsing():
    assert str(TypeLabel.parse("{4², 5}")) == "{4^2,5}"
    assert str(TypeLabel.parse("{3,2^1}")) == "{2^1,3}"
    for bad in ("{1,3}", "{6}", "2^1", "{2}"):
        with pytest.raises(InputError):
            TypeLabel.parse(bad)


@pytest.mark.parametrize("name,s", [("F004A", 2), ("F010A", 3), ("F014A", 4), ("F026A", 1),
                                    ("F030A", 5), ("F008A", 2), ("F006A", 3)])
def test_arc_regularity_level(name, s):
    X, G = graph(name), aut(name)
    assert arc_regularity_level(X, G) == s
    assert G.order == 3 * 2 ** (s - 1) * X.n


@pytest.mark.parametrize("name", ["F004A", "F006A", "F008A", "F010A", "F014A", "F016A"])
def test_arc_level_matches_s_arc_orbits(name):
    X, G = graph(name), aut(name)
    s = level(name)
    elements = [g.images for g in G.elements()]
    # transitive on s-arcs, and there are exactly |G| of them
    assert s_arc_orbit_count(X.n, X.edges(), elements, s) == 1
    if s < 5:
        assert s_arc_orbit_count(X.n, X.edges(), elements, s + 1) > 1


def test_non_symmetric_inputs_rejected():
    P = prism(5)  # vertex-transitive, not arc-transitive
    with pytest.raises(NotArcTransitiveError):
        arc_regularity_level(P, automorphism_group(P))
    with pytest.raises(NotSymmetricError):
        arc_regularity_level(cycle_graph(6), automorphism_group(cycle_graph(6)))


@pytest.mark.parametrize("name,vertex,edge", [
    ("F010A", "S3xZ2", "D8"), ("F004A", "S3", "Z2^2"), ("F014A", "S4", "D16"),
    ("F026A", "Z3", "Z2"), ("F030A", "S4xZ2", "(D8xZ2):Z2"),
])
def test_stabilizer_structures(name, vertex, edge):
    st = stabilizer_structures(graph(name), aut(name), level(name))
    assert (st.vertex_label, st.edge_label) == (vertex, edge)


def test_heawood_edge_stabilizer_decided_by_involutions():
    st = stabilizer_structures(graph("F014A"), aut("F014A"), 4)
    assert st.edge_fingerprint.involution_count == 9
    assert identify(metacyclic_regular(3).fingerprint()) == "QD16"


def test_stabilizer_mismatch_is_a_classification_error():
    with pytest.raises(ClassificationError):
        stabilizer_structures(graph("F010A"), aut("F010A"), 2)


@pytest.mark.parametrize("name", sorted(GOLDEN_TYPES))
def test_golden_types(name):
    X = graph(name)
    ev = type_label(X, aut(name), level(name))
    assert str(ev.label) == GOLDEN_TYPES[name]
    rule = ev.label.bipartite_rule
    if rule is not None:
        assert rule == (is_bipartite(X) is not None)


def test_find_regular_subgroups_examples():
    X, G = graph("F010A"), aut("F010A")
    assert find_regular_subgroups(X, G, 1) == []
    recs = find_regular_subgroups(X, G, 2)
    assert recs and all(r.subtype == 1 for r in recs)
    assert all(g.order in (1, 2, 3, 5) for g in recs[0].group.elements())  # A5
    K4, G4 = graph("F004A"), aut("F004A")
    recs = find_regular_subgroups(K4, G4, 1)
    assert len(recs) == 1 and recs[0].group.order == 12


def _brute_regular_subgroups(name, lv):
    """Arc-regular subgroups of the given level, as element sets.

    Every vertex stabilizer of a cubic arc-transitive group (Z3, S3, D12, S4,
    S4xZ2) is 2-generated, so every such subgroup is <x, y, z> with x, y fixing
    vertex 0 and z swapping 0 with its first neighbour.
    """
    X, G = graph(name), aut(name)
    target = 3 * 2 ** (lv - 1) * X.n
    elements = list(G.elements())
    v = X.neighbors(0)[0]
    stab = [g.images for g in elements if g(0) == 0]
    swap = [g.images for g in elements if g(0) == v and g(v) == 0]
    found = set()
    for x in stab:
        for y in stab:
            for z in swap:
                if closure_order([x, y, z]) != target:
                    continue
                ident = tuple(range(X.n))
                group = {ident}
                stack = [ident]
                while stack:
                    p = stack.pop()
                    for g in (x, y, z):
                        q = tuple(g[i] for i in p)
                        if q not in group:
                            group.add(q)
                            stack.append(q)
                if len({p[0] for p in group}) == X.n:
                    found.add(frozenset(group))
    return found


@pytest.mark.parametrize("name", ["F004A", "F006A", "F008A", "F010A", "F016A"])
def test_sweep_matches_exhaustive_generation(name):
    X, G = graph(name), aut(name)
    for lv in range(1, level(name) + 1):
        recs = find_regular_subgroups(X, G, lv)
        mine = {frozenset(g.images for g in r.group.elements()) for r in recs}
        assert mine == _brute_regular_subgroups(name, lv), lv


@pytest.mark.parametrize("name", ["F004A", "F006A", "F010A", "F014A", "F018A", "F020B", "F028A"])
def test_record_invariants(name):
    X, G = graph(name), aut(name)
    edges = X.edges()
    for lv in range(1, level(name) + 1):
        for r in find_regular_subgroups(X, G, lv):
            K = r.group
            assert K.order == 3 * 2 ** (lv - 1) * X.n
            assert K.is_subgroup_of(G)
            assert PermGroup(K.generators).order == K.order
            u = X.neighbors(0)[0]
            assert set(K.point_stabilizer(0).orbit(u)) == set(X.neighbors(0))
            a = r.arc_reverser
            assert K.contains(a) and a(0) == X.neighbors(0)[0] and a(X.neighbors(0)[0]) == 0
            flips_an_edge = any(g.order == 2 and any(g(p) == q and g(q) == p for p, q in edges)
                                for g in K.elements())
            if lv in (2, 4):
                assert (r.subtype == 1) == flips_an_edge
            if lv == 1:
                # 1-regular groups act regularly on arcs, so involutions fix no vertex
                assert all(not g.fixed_points() for g in K.elements() if g.order == 2)


def test_bipartite_edge_flips_are_semiregular():
    X, G = graph("F014A"), aut("F014A")
    for r in find_regular_subgroups(X, G, 4):
        if r.subtype == 1:
            assert r.arc_reverser.order == 2 and not r.arc_reverser.fixed_points()


def test_type_from_records_rejects_inadmissible_sets():
    from oddaut.symclass import RegularSubgroupRecord
    from oddaut.permcore import Permutation
    e = Permutation.identity(2)
    fake = {1: [RegularSubgroupRecord(1, None, PermGroup([e]), e)],
            3: [RegularSubgroupRecord(3, None, PermGroup([e]), e)]}
    with pytest.raises(ClassificationError):
        type_from_records(3, fake)


def test_girth_type_check():
    assert not girth_type_check(graph("F010A"), "{2^1,3}")
    assert not girth_type_check(graph("F014A"), "{1,4^1}")
    assert girth_type_check(graph("F016A"), "{2^2}")  # girth 6 is not > 9
    assert girth_type_check(graph("F030A"), "{4^2}")  # girth 8


def test_table2_rows_cover_every_level():
    assert sorted(TABLE2) == [1, 2, 3, 4, 5]
    assert TABLE2[4][0] == "S4" and set(TABLE2[4][1]) == {"D16", "QD16"}
