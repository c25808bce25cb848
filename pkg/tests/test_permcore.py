from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import aut, graph
from oddaut.errors import EnumerationBoundError, InputError
from oddaut.permcore import (Permutation, PermGroup, Sign, closure, cycle_structure, fingerprint,
                             has_odd_element, is_semiregular, membership, parity, parse_cycles,
                             parse_oneline, setwise_pair_stabilizer, to_cycle_string,
                             to_oneline_string)
from oracles import closure_order, metacyclic_involutions, parity_by_inversions


def perms(max_degree=8, degree=None):
    if degree is not None:
        return st.permutations(range(degree)).map(Permutation)
    return st.integers(1, max_degree).flatmap(lambda d: st.permutations(range(d)).map(Permutation))


def cyc(text, degree):
    return parse_cycles(text, degree)


def sym(n):
    return PermGroup([cyc("(0 1)", n), Permutation(tuple(range(1, n)) + (0,))])


def alt(n):
    return PermGroup([cyc(f"(0 1 {i})", n) for i in range(2, n)])


# parity and cycles

def test_parity_examples():
    assert parity(Permutation.identity(10)) is Sign.EVEN
    assert parity(cyc("(0 1)", 4)) is Sign.ODD
    assert parity(cyc("(0 1 2 3)", 8)) is Sign.ODD


def test_cycle_structure_examples():
    assert cycle_structure(Permutation.identity(6)) == Counter({1: 6})
    assert cycle_structure(cyc("(0 1 2)(3 4)", 5)) == Counter({3: 1, 2: 1})
    assert cycle_structure(cyc("(0 1 2 3)(4 5 6 7)", 8)) == Counter({4: 2})


def test_is_semiregular_examples():
    assert is_semiregular(cyc("(0 1)(2 3)(4 5)", 6))
    assert not is_semiregular(cyc("(0 1 2)(3 4)", 5))
    with pytest.raises(InputError):
        is_semiregular(Permutation.identity(3))


def test_cube_antipodal_map_is_semiregular():
    X, G = graph("F008A"), aut("F008A")
    # the central involution commutes with every automorphism and fixes nothing
    central = [g for g in G.elements() if g.order == 2 and all(g * h == h * g for h in G.generators)]
    assert len(central) == 1
    assert is_semiregular(central[0])
    assert central[0].cycle_type() == (2, 2, 2, 2)


@given(perms())
def test_cycle_lengths_sum_to_degree(p):
    assert sum(cycle_structure(p).elements()) == p.degree


@given(st.integers(1, 9).flatmap(lambda d: st.tuples(perms(degree=d), perms(degree=d))))
def test_parity_is_a_homomorphism(pair):
    p, q = pair
    assert parity(p * q) == parity(p) * parity(q)


@given(perms(9))
def test_parity_matches_inversion_count(p):
    assert (parity(p) is Sign.ODD) == (parity_by_inversions(p.images) == 1)


@given(perms(9))
def test_right_action_convention(p):
    q = Permutation(tuple(reversed(range(p.degree))))
    assert all((p * q)(i) == q(p(i)) for i in range(p.degree))


@given(perms(9))
def test_inverse_and_order(p):
    assert (p * p.inverse()).is_identity()
    assert (p ** p.order).is_identity()
    assert all(not (p ** k).is_identity() for k in range(1, p.order))


# text formats

@given(perms(10))
def test_cycle_string_round_trip(p):
    assert parse_cycles(to_cycle_string(p), p.degree) == p


@given(perms(10))
def test_oneline_round_trip(p):
    assert parse_oneline(to_oneline_string(p)) == p


def test_text_format_examples():
    p = parse_oneline("5: 1 2 0 4 3")
    assert to_cycle_string(p) == "(0 1 2)(3 4)"
    assert str(Permutation.identity(3)) == "()"
    for bad in ("5: 1 2 3", "1 2 0", "3: 0 0 1"):
        with pytest.raises(InputError):
            parse_oneline(bad)
    with pytest.raises(InputError):
        parse_cycles("(0 1) x", 3)
    with pytest.raises(InputError):
        parse_cycles("(0 1)(1 2)", 3)


def test_invalid_permutation_rejected():
    with pytest.raises(InputError):
        Permutation((0, 0, 1))


# groups

def test_build_group_examples():
    assert sym(5).order == 120
    assert aut("F010A").order == 120
    assert aut("F014A").order == 336


def test_degree_mismatch_rejected():
    with pytest.raises(InputError):
        PermGroup([Permutation.identity(3), Permutation.identity(4)])


def test_membership_examples():
    c5 = PermGroup([cyc("(0 1 2 3 4)", 5)])
    assert membership(c5, Permutation.identity(5))
    assert not membership(c5, cyc("(0 1)", 5))
    X, G = graph("F010A"), aut("F010A")
    # GP(5,2): outer i -> i+1, inner 5+i -> 5+i+1
    rotation = Permutation(tuple((i + 1) % 5 for i in range(5)) + tuple(5 + (i + 1) % 5 for i in range(5)))
    assert X.is_automorphism(rotation)
    assert membership(G, rotation)


def test_orbit_and_stabilizer_examples():
    c5 = PermGroup([cyc("(0 1 2 3 4)", 5)])
    assert c5.orbits() == [[0, 1, 2, 3, 4]]
    assert c5.point_stabilizer(0).order == 1
    assert aut("F010A").point_stabilizer(3).order == 12
    assert PermGroup([cyc("(0 1)", 4)]).orbits() == [[0, 1], [2], [3]]


def test_setwise_pair_stabilizer_examples():
    X, G = graph("F010A"), aut("F010A")
    u, v = X.edges()[0]
    stab = setwise_pair_stabilizer(G, (u, v))
    assert stab.order == 8
    assert fingerprint(stab).involution_count == 5 and not stab.is_abelian()  # D8
    X, G = graph("F014A"), aut("F014A")
    assert setwise_pair_stabilizer(G, X.edges()[0]).order == 16
    a4 = alt(4)
    assert setwise_pair_stabilizer(a4, (0, 2)).order == 2


def test_enumerate_elements_examples():
    assert len(list(PermGroup([], 4).elements())) == 1
    assert len(list(aut("F004A").elements())) == 24
    assert len(set(aut("F014A").elements())) == 336


def test_enumeration_bound_is_an_error():
    with pytest.raises(EnumerationBoundError):
        list(sym(6).elements(bound=100))


def test_has_odd_element_examples():
    ok, w = has_odd_element(PermGroup([cyc("(0 1)", 2)]))
    assert ok and w == cyc("(0 1)", 2)
    assert has_odd_element(alt(5)) == (False, None)
    assert has_odd_element(aut("F010A"))[0]


def test_fingerprint_examples():
    v4 = PermGroup([cyc("(0 1)(2 3)", 4), cyc("(0 2)(1 3)", 4)])
    z4 = PermGroup([cyc("(0 1 2 3)", 4)])
    f, g = fingerprint(v4), fingerprint(z4)
    assert (f.order, f.exponent, f.involution_count) == (4, 2, 3)
    assert (g.order, g.exponent, g.involution_count) == (4, 4, 1)
    assert f.key() != g.key()


def test_fingerprint_separates_d16_from_qd16():
    from oddaut.symclass import metacyclic_regular
    d16, qd16 = metacyclic_regular(7), metacyclic_regular(3)
    assert fingerprint(d16).involution_count == metacyclic_involutions(7) == 9
    assert fingerprint(qd16).involution_count == metacyclic_involutions(3) == 5
    assert fingerprint(d16).key() != fingerprint(qd16).key()


@given(st.integers(1, 8).flatmap(lambda d: st.lists(perms(degree=d), min_size=1, max_size=3)))
def test_order_matches_naive_closure(gens):
    G = PermGroup(gens)
    assert G.order == closure_order([g.images for g in gens]) == len(closure(gens))


@given(st.integers(1, 7).flatmap(lambda d: st.lists(perms(degree=d), min_size=1, max_size=3)))
def test_enumeration_equals_order_and_members(gens):
    G = PermGroup(gens)
    elems = list(G.elements())
    assert len(elems) == len(set(elems)) == G.order
    assert all(G.contains(g) for g in elems)
    assert all(G.contains(g) for g in gens)


@given(st.integers(1, 8).flatmap(lambda d: st.lists(perms(degree=d), min_size=1, max_size=3)))
def test_orbit_stabilizer(gens):
    G = PermGroup(gens)
    for v in range(G.degree):
        assert G.order == len(G.orbit(v)) * G.point_stabilizer(v).order


@given(st.integers(1, 7).flatmap(lambda d: st.lists(perms(degree=d), min_size=1, max_size=3)))
def test_has_odd_element_is_exact(gens):
    G = PermGroup(gens)
    assert G.has_odd_element()[0] == any(g.is_odd() for g in G.elements())


@given(st.integers(1, 8).flatmap(lambda d: st.lists(perms(degree=d), min_size=1, max_size=3)))
def test_order_is_product_of_basic_orbits(gens):
    G = PermGroup(gens)
    prod = 1
    for orb in G.basic_orbits:
        prod *= len(orb)
    assert prod == G.order


def test_bounded_construction_aborts():
    assert PermGroup.bounded(sym(6).generators, 6, 100) is None
    assert PermGroup.bounded(sym(4).generators, 4, 24).order == 24


def test_histogram_sums_to_order():
    fp = fingerprint(aut("F010A"))
    assert sum(fp.element_order_histogram.values()) == fp.order == 120
    assert fp.involution_count == fp.element_order_histogram[2]
