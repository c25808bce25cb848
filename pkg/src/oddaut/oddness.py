"""Odd automorphisms of cubic symmetric graphs, decided two independent ways.

The direct route reads parities off the generators of Aut(X): parity is a
homomorphism, so an odd element exists exactly when an odd generator does.
The predictive route looks only at the type of X, the parity of n (where
|V(X)| = 2n), bipartiteness and, for type {1,2^1} with n even, whether X is
an m-Cayley graph on a cyclic 2-group.  ``cross_validate`` runs both and
records whether they agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .autsearch import DEFAULT_VERTEX_BOUND, automorphism_group
from .errors import InputError
from .graphcore import Graph, is_bipartite
from .permcore import DEFAULT_ENUMERATION_BOUND, Permutation, PermGroup
from .symclass import TypeEvidence, TypeLabel, arc_regularity_level, type_label

# rule id -> (types it covers, description)
RULES: dict[str, tuple[frozenset[str], str]] = {
    "n-odd": (frozenset({"{1}", "{1,2^1,2^2,3}", "{2^1,2^2,3}", "{2^1,3}", "{2^2,3}",
                         "{1,4^1}", "{4^2}", "{1,4^1,4^2,5}", "{4^1,4^2,5}"}),
              "n odd"),
    "n-odd-and-bipartite": (frozenset({"{2^1}", "{3}", "{4^1}", "{5}"}),
                            "n odd and X bipartite"),
    "n-odd-or-cyclic-m-cayley": (frozenset({"{1,2^1}"}),
                                 "n odd, or X is an m-Cayley graph on Z_(2^k), m odd, k >= 2"),
    "never": (frozenset({"{2^2}", "{4^1,5}", "{4^2,5}"}), "never"),
}


def rule_for(label: TypeLabel | str) -> str:
    key = str(label)
    for rule, (types, _) in RULES.items():
        if key in types:
            return rule
    raise InputError(f"no rule for type {key}")


@dataclass(frozen=True)
class Verdict:
    exists: bool
    witness: Permutation | None = None


@dataclass(frozen=True)
class Prediction:
    exists: bool
    rule: str


@dataclass(frozen=True)
class MCayleyWitness:
    k: int
    m: int
    element: Permutation


def _checked_witness(X: Graph, w: Permutation) -> Permutation:
    if not (X.is_automorphism(w) and w.is_odd()):
        raise RuntimeError("odd witness failed verification")
    return w


def detect_odd_direct(X: Graph, G: PermGroup) -> Verdict:
    """Least odd generator (by image sequence) among the generators and strong generators."""
    odd = sorted({g for g in G.generators + G.strong_generators if g.is_odd()})
    if not odd:
        return Verdict(False)
    return Verdict(True, _checked_witness(X, odd[0]))


def _odd_part(k: int) -> int:
    while k % 2 == 0:
        k //= 2
    return k


def two_power_odd_witness(X: Graph, G: PermGroup) -> Permutation | None:
    """An odd automorphism of 2-power order, or None when every automorphism is even.

    If w is odd of order 2^a * m with m odd, then w^m has order 2^a and the
    same parity as w.
    """
    direct = detect_odd_direct(X, G)
    if not direct.exists:
        return None
    w = direct.witness ** _odd_part(direct.witness.order)
    return _checked_witness(X, w)


def two_adic_split(N: int) -> tuple[int, int]:
    """``(k, m)`` with ``N = 2^k * m`` and m odd."""
    k = (N & -N).bit_length() - 1
    return k, N >> k


def m_cayley_cyclic_witness(X: Graph, G: PermGroup,
                            bound: int = DEFAULT_ENUMERATION_BOUND) -> MCayleyWitness | None:
    """A semiregular automorphism of order 2^k with m cycles, where |V| = 2^k * m, m odd, k >= 2.

    Such an element generates a cyclic group making X an m-Cayley graph on
    Z_(2^k).  The least one by image sequence is returned.
    """
    k, m = two_adic_split(X.n)
    if k < 2:
        return None
    target = (2 ** k,) * m
    best = None
    for g in G.elements(bound):
        if g.order == 2 ** k and g.cycle_type() == target:
            if best is None or g < best:
                best = g
    return None if best is None else MCayleyWitness(k, m, best)


def predict_odd(label: TypeLabel | str, n: int, bipartite: bool,
                m_cayley_present: bool | None = None) -> Prediction:
    """Existence of odd automorphisms as dictated by the type of the graph."""
    rule = rule_for(label)
    odd_n = n % 2 == 1
    if rule == "n-odd":
        return Prediction(odd_n, rule)
    if rule == "n-odd-and-bipartite":
        return Prediction(odd_n and bipartite, rule)
    if rule == "never":
        return Prediction(False, rule)
    if odd_n:
        return Prediction(True, rule)
    if m_cayley_present is None:
        raise InputError("type {1,2^1} with n even needs the cyclic m-Cayley test")
    return Prediction(bool(m_cayley_present), rule)


def needs_m_cayley(label: TypeLabel | str, n: int) -> bool:
    return str(label) == "{1,2^1}" and n % 2 == 0


@dataclass
class OddnessReport:
    order_2n: int
    bipartite: bool
    type: TypeLabel
    s: int
    direct: Verdict
    predicted: Prediction
    two_power_witness: Permutation | None
    m_cayley: MCayleyWitness | None
    agree: bool

    @property
    def n(self) -> int:
        return self.order_2n // 2

    @property
    def n_parity(self) -> str:
        return "odd" if self.n % 2 else "even"

    def to_json(self) -> dict:
        def cyc(p):
            return None if p is None else str(p)
        return {
            "order": self.order_2n,
            "n": self.n,
            "bipartite": self.bipartite,
            "type": str(self.type),
            "s": self.s,
            "direct": {"exists": self.direct.exists, "witness_cycles": cyc(self.direct.witness)},
            "two_power": None if self.two_power_witness is None else {
                "order": self.two_power_witness.order,
                "witness_cycles": cyc(self.two_power_witness)},
            "predicted": {"exists": self.predicted.exists, "rule": self.predicted.rule},
            "m_cayley": None if self.m_cayley is None else {
                "k": self.m_cayley.k, "m": self.m_cayley.m,
                "witness_cycles": cyc(self.m_cayley.element)},
            "agree": self.agree,
        }


def cross_validate(X: Graph, G: PermGroup | None = None, evidence: TypeEvidence | None = None,
                   vertex_bound: int = DEFAULT_VERTEX_BOUND,
                   enumeration_bound: int = DEFAULT_ENUMERATION_BOUND) -> OddnessReport:
    if G is None:
        G = automorphism_group(X, vertex_bound)
    if evidence is None:
        evidence = type_label(X, G, arc_regularity_level(X, G))
    n = X.n // 2
    bip = is_bipartite(X) is not None
    mc = None
    if needs_m_cayley(evidence.label, n):
        mc = m_cayley_cyclic_witness(X, G, enumeration_bound)
    predicted = predict_odd(evidence.label, n, bip, mc is not None)
    direct = detect_odd_direct(X, G)
    two = two_power_odd_witness(X, G)
    if mc is not None and not mc.element.is_odd():
        raise RuntimeError("cyclic m-Cayley witness is even")
    return OddnessReport(X.n, bip, evidence.label, evidence.s, direct, predicted, two, mc,
                         direct.exists == predicted.exists)
