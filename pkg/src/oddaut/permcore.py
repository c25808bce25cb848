"""Permutations and permutation groups.

Permutations act on the right: ``(p * q)(i) == q(p(i))``, i.e. ``p`` is
applied first.  Groups are held as a base and strong generating set built by
a deterministic Schreier-Sims procedure, so every run produces the same base,
the same strong generators and the same element enumeration order.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import EnumerationBoundError, InputError, ResourceBoundError

DEFAULT_ENUMERATION_BOUND = 10**6


class Sign(IntEnum):
    EVEN = 1
    ODD = -1

    def __mul__(self, other):
        return Sign(int(self) * int(other))

    def __str__(self):
        return self.name.lower()


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of ``{0, ..., degree-1}`` stored as its image sequence."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if not images:
            raise InputError("permutation must have positive degree")
        seen = [False] * len(images)
        for x in images:
            if not 0 <= x < len(images) or seen[x]:
                raise InputError(f"not a permutation: {images!r}")
            seen[x] = True
        object.__setattr__(self, "images", images)

    @classmethod
    def _unchecked(cls, images: tuple[int, ...]) -> "Permutation":
        p = object.__new__(cls)
        object.__setattr__(p, "images", images)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._unchecked(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            cycle = [int(x) for x in cycle]
            for x in cycle:
                if not 0 <= x < degree or x in seen:
                    raise InputError(f"bad cycle {cycle!r} for degree {degree}")
                seen.add(x)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a] = b
        return cls._unchecked(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise InputError("degree mismatch")
        img = other.images
        return Permutation._unchecked(tuple(img[i] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation._unchecked(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    @cached_property
    def _cycles(self) -> tuple[tuple[int, ...], ...]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                seen[x] = True
                cycle.append(x)
                x = self.images[x]
            out.append(tuple(cycle))
        return tuple(out)

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its least point."""
        return [c for c in self._cycles if include_fixed or len(c) > 1]

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths including fixed points, in decreasing order."""
        return tuple(sorted((len(c) for c in self._cycles), reverse=True))

    @cached_property
    def order(self) -> int:
        return math.lcm(*(len(c) for c in self._cycles))

    @property
    def sign(self) -> Sign:
        return Sign.ODD if (self.degree - len(self._cycles)) % 2 else Sign.EVEN

    def is_odd(self) -> bool:
        return self.sign is Sign.ODD

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def fixed_points(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i == x]

    def __str__(self) -> str:
        return to_cycle_string(self)

    def __repr__(self) -> str:
        return f"Permutation({to_cycle_string(self)!r}, degree={self.degree})"


def parity(p: Permutation) -> Sign:
    return p.sign


def cycle_structure(p: Permutation) -> Counter:
    """Multiset of cycle lengths (fixed points count as 1-cycles)."""
    return Counter(p.cycle_type())


def is_semiregular(p: Permutation) -> bool:
    """True iff every cycle of ``p`` has the same length.

    The identity is rejected: it would be vacuously semiregular, which is
    never the question being asked.
    """
    if p.is_identity():
        raise InputError("is_semiregular is undefined for the identity")
    return len(set(p.cycle_type())) == 1


# -- text formats ------------------------------------------------------------

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def to_cycle_string(p: Permutation) -> str:
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse cycle notation such as ``"(0 1 2)(3 4)"``; ``"()"`` is the identity."""
    stripped = _CYCLE_RE.sub("", text).strip()
    if stripped:
        raise InputError(f"cannot parse cycle notation {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(text):
        body = body.replace(",", " ").split()
        if body:
            cycles.append([int(x) for x in body])
    return Permutation.from_cycles(cycles, degree)


def to_oneline_string(p: Permutation) -> str:
    return f"{p.degree}: " + " ".join(map(str, p.images))


def parse_oneline(text: str) -> Permutation:
    """Parse ``"5: 1 2 0 4 3"`` (degree, colon, image sequence)."""
    head, sep, body = text.partition(":")
    if not sep:
        raise InputError(f"one-line permutation needs 'degree:' prefix: {text!r}")
    try:
        degree = int(head)
        images = tuple(int(x) for x in body.split())
    except ValueError as exc:
        raise InputError(f"cannot parse {text!r}") from exc
    if len(images) != degree:
        raise InputError(f"expected {degree} images, got {len(images)}")
    return Permutation(images)


# -- groups ------------------------------------------------------------------


class _Level:
    """One level of the stabilizer chain: base point, generators, transversal."""

    __slots__ = ("point", "gens", "orbit", "trans", "inv", "checked")

    def __init__(self, point: int, n: int):
        self.point = point
        self.gens: list[np.ndarray] = []
        self.orbit: list[int] = [point]
        ident = np.arange(n)
        self.trans: dict[int, np.ndarray] = {point: ident}
        self.inv: dict[int, np.ndarray] = {point: ident}
        self.checked: set[tuple[int, int]] = set()

    def extend_orbit(self) -> None:
        trans, inv, orbit = self.trans, self.inv, self.orbit
        i = 0
        while i < len(orbit):
            beta = orbit[i]
            u = trans[beta]
            for s in self.gens:
                gamma = int(s[beta])
                if gamma not in trans:
                    t = s[u]
                    trans[gamma] = t
                    ti = np.empty_like(t)
                    ti[t] = np.arange(len(t))
                    inv[gamma] = ti
                    orbit.append(gamma)
            i += 1


@dataclass(frozen=True)
class GroupFingerprint:
    order: int
    is_abelian: bool
    exponent: int
    element_order_histogram: dict[int, int]
    involution_count: int

    def key(self) -> tuple:
        return (self.order, self.is_abelian, self.exponent,
                tuple(sorted(self.element_order_histogram.items())))


class OrderLimitExceeded(ResourceBoundError):
    """Raised while building a group whose order provably exceeds ``order_limit``."""


class PermGroup:
    """Permutation group given by generators, with a base and strong generating set.

    Base points are taken in increasing order of the least point moved by
    the generator that forces a new level; ``base_prefix`` pins the first
    base points (used for stabilizer computations).
    """

    def __init__(self, generators: Iterable[Permutation], degree: int | None = None,
                 base_prefix: Sequence[int] = (), order_limit: int | None = None):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise InputError("need a generator or an explicit degree")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise InputError(f"generator degree {g.degree} != {degree}")
        if not gens:
            gens = [Permutation.identity(degree)]
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self._ident = np.arange(degree)
        self._levels: list[_Level] = []
        self._strong: list[np.ndarray] = []
        self._order_limit = order_limit
        for b in base_prefix:
            if not 0 <= b < degree or any(lv.point == b for lv in self._levels):
                raise InputError(f"bad base point {b}")
            self._levels.append(_Level(int(b), degree))
        self._schreier_sims()

    # construction

    def _is_ident(self, a: np.ndarray) -> bool:
        return bool(np.array_equal(a, self._ident))

    def _sift(self, g: np.ndarray, start: int) -> tuple[np.ndarray, int]:
        levels = self._levels
        for j in range(start, len(levels)):
            lev = levels[j]
            inv = lev.inv.get(int(g[lev.point]))
            if inv is None:
                return g, j
            g = inv[g]
        return g, len(levels)

    def _add_strong(self, h: np.ndarray, lo: int, hi: int) -> None:
        if hi == len(self._levels):
            moved = np.flatnonzero(h != self._ident)
            self._levels.append(_Level(int(moved[0]), self.degree))
        self._strong.append(h)
        for j in range(lo, hi + 1):
            self._levels[j].gens.append(h)
            self._levels[j].extend_orbit()
        if self._order_limit is not None:
            # orbits only grow, so the running product bounds the final order from below
            if math.prod(len(lev.orbit) for lev in self._levels) > self._order_limit:
                raise OrderLimitExceeded

    def _schreier_sims(self) -> None:
        for gen in self.generators:
            h, j = self._sift(np.array(gen.images), 0)
            if not self._is_ident(h):
                self._add_strong(h, 0, j)
        i = len(self._levels) - 1
        while i >= 0:
            lev = self._levels[i]
            restart = False
            for beta in list(lev.orbit):
                u = lev.trans[beta]
                for k, s in enumerate(lev.gens):
                    if (beta, k) in lev.checked:
                        continue
                    y = lev.inv[int(s[beta])][s[u]]
                    h, j = self._sift(y, i + 1)
                    if not self._is_ident(h):
                        self._add_strong(h, i + 1, j)
                        i = j
                        restart = True
                        break
                    lev.checked.add((beta, k))
                if restart:
                    break
            if not restart:
                i -= 1
        for lev in self._levels:
            lev.checked.clear()

    # basic data

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(lev.point for lev in self._levels)

    @property
    def strong_generators(self) -> tuple[Permutation, ...]:
        return tuple(Permutation._unchecked(tuple(h.tolist())) for h in self._strong)

    @property
    def basic_orbits(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(lev.orbit) for lev in self._levels)

    def transversal_element(self, level: int, point: int) -> Permutation:
        """Element of the ``level``-th stabilizer mapping the base point to ``point``."""
        return Permutation._unchecked(tuple(self._levels[level].trans[point].tolist()))

    def level_generators(self, level: int) -> list[Permutation]:
        if level >= len(self._levels):
            return []
        return [Permutation._unchecked(tuple(h.tolist())) for h in self._levels[level].gens]

    @cached_property
    def order(self) -> int:
        return math.prod(len(lev.orbit) for lev in self._levels)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"<PermGroup degree={self.degree} order={self.order}>"

    def is_trivial(self) -> bool:
        return self.order == 1

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            return False
        h, j = self._sift(np.array(p.images), 0)
        return j == len(self._levels) and self._is_ident(h)

    __contains__ = contains

    def same_group(self, other: "PermGroup") -> bool:
        return (self.degree == other.degree and self.order == other.order
                and all(other.contains(g) for g in self.generators))

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(other.contains(g) for g in self.generators)

    # orbits and stabilizers

    def orbit(self, point: int) -> list[int]:
        seen = {point}
        out = [point]
        i = 0
        while i < len(out):
            x = out[i]
            for g in self.generators:
                y = g.images[x]
                if y not in seen:
                    seen.add(y)
                    out.append(y)
            i += 1
        return sorted(out)

    def orbits(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for v in range(self.degree):
            if v not in seen:
                orb = self.orbit(v)
                seen.update(orb)
                out.append(orb)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    @classmethod
    def bounded(cls, generators: Iterable[Permutation], degree: int, order_limit: int) -> "PermGroup | None":
        """The generated group, or None as soon as its order is known to exceed ``order_limit``."""
        try:
            return cls(generators, degree, order_limit=order_limit)
        except OrderLimitExceeded:
            return None

    def with_base_prefix(self, points: Sequence[int]) -> "PermGroup":
        """Same group, rebuilt so that ``points`` lead the base."""
        return PermGroup(self.strong_generators or self.generators, self.degree, base_prefix=points)

    def pointwise_stabilizer(self, points: Sequence[int]) -> "PermGroup":
        points = list(dict.fromkeys(int(p) for p in points))
        if not points:
            return self
        g = self.with_base_prefix(points)
        return PermGroup(g.level_generators(len(points)), self.degree)

    def point_stabilizer(self, v: int) -> "PermGroup":
        return self.pointwise_stabilizer([v])

    def element_mapping(self, u: int, v: int) -> Permutation | None:
        """Some element sending ``u`` to ``v``, or None."""
        g = self.with_base_prefix([u])
        lev = g._levels[0]
        if v not in lev.trans:
            return None
        return Permutation._unchecked(tuple(lev.trans[v].tolist()))

    def setwise_pair_stabilizer(self, u: int, v: int) -> "PermGroup":
        """Stabilizer of the 2-set ``{u, v}``.

        Enumerates ``G_u`` and its coset sending ``u`` to ``v``; both are small
        for the groups this package deals with.
        """
        if u == v:
            raise InputError("pair stabilizer needs two distinct points")
        gu = self.point_stabilizer(u)
        fixers = [h for h in gu.elements() if h(v) == v]
        gens = list(fixers)
        t = self.element_mapping(u, v)
        if t is not None:
            gens.extend(x for x in (h * t for h in gu.elements()) if x(v) == u)
        return PermGroup(gens, self.degree)

    # enumeration

    def elements(self, bound: int = DEFAULT_ENUMERATION_BOUND) -> Iterator[Permutation]:
        """Yield every element exactly once, in a fixed order."""
        for arr in self._element_arrays(bound):
            yield Permutation._unchecked(tuple(arr.tolist()))

    def _element_arrays(self, bound: int) -> Iterator[np.ndarray]:
        if self.order > bound:
            raise EnumerationBoundError(
                f"group order {self.order} exceeds enumeration bound {bound}")
        levels = self._levels
        k = len(levels)

        def walk(j: int, partial: np.ndarray):
            # element = u_{k-1} * ... * u_0, applied left to right
            if j < 0:
                yield partial
                return
            lev = levels[j]
            for beta in lev.orbit:
                yield from walk(j - 1, lev.trans[beta][partial])

        yield from walk(k - 1, self._ident)

    def has_odd_element(self) -> tuple[bool, Permutation | None]:
        """Parity is a homomorphism, so an odd element exists iff an odd generator does."""
        for g in self.generators:
            if g.is_odd():
                return True, g
        return False, None

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])

    def fingerprint(self, bound: int = DEFAULT_ENUMERATION_BOUND) -> GroupFingerprint:
        hist: Counter = Counter(g.order for g in self.elements(bound))
        return GroupFingerprint(
            order=self.order,
            is_abelian=self.is_abelian(),
            exponent=math.lcm(*hist),
            element_order_histogram=dict(sorted(hist.items())),
            involution_count=hist.get(2, 0),
        )


def build_group(generators: Iterable[Permutation], degree: int | None = None) -> PermGroup:
    return PermGroup(generators, degree)


def membership(group: PermGroup, p: Permutation) -> bool:
    return group.contains(p)


def orbits(group: PermGroup) -> list[list[int]]:
    return group.orbits()


def point_stabilizer(group: PermGroup, v: int) -> PermGroup:
    return group.point_stabilizer(v)


def setwise_pair_stabilizer(group: PermGroup, pair: Iterable[int]) -> PermGroup:
    u, v = pair
    return group.setwise_pair_stabilizer(u, v)


def enumerate_elements(group: PermGroup, bound: int = DEFAULT_ENUMERATION_BOUND) -> Iterator[Permutation]:
    return group.elements(bound)


def has_odd_element(group: PermGroup) -> tuple[bool, Permutation | None]:
    return group.has_odd_element()


def fingerprint(group: PermGroup, bound: int = DEFAULT_ENUMERATION_BOUND) -> GroupFingerprint:
    return group.fingerprint(bound)


def closure(generators: Sequence[Permutation], bound: int = DEFAULT_ENUMERATION_BOUND) -> set[Permutation]:
    """All elements of the generated group by naive breadth-first closure.

    Independent of the stabilizer chain; used as an oracle.
    """
    gens = list(generators)
    ident = Permutation.identity(gens[0].degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > bound:
                        raise EnumerationBoundError("closure exceeded bound")
        frontier = nxt
    return seen
