"""Automorphism groups and isomorphisms by individualization-refinement.

Partitions are refined to equitable ones by counting, for every vertex, its
neighbours in a splitter cell (out- and in-neighbours separately for
digraphs).  Each refinement records a trace of its splits; two search-tree
nodes can only be equivalent when their traces agree.

Automorphisms are harvested against the first leaf.  The search walks the
first path bottom-up; at level ``i`` it tries every vertex of the target cell
that is not yet in the orbit of the first-path vertex under the automorphisms
found so far (all of which fix the first ``i`` individualized vertices).  The
group order is the product of those orbit lengths, and an independent
Schreier-Sims run over the harvested generators must reproduce it.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .errors import VertexBoundError
from .graphcore import Graph
from .permcore import Permutation, PermGroup

DEFAULT_VERTEX_BOUND = 5000


class ColoredPartition:
    """Ordered partition stored nauty-style: ``lab`` lists the vertices, cells
    are contiguous slices identified by their start index."""

    __slots__ = ("lab", "cell", "size", "ncells")

    def __init__(self, lab: list[int], cell: list[int], size: list[int], ncells: int):
        self.lab = lab
        self.cell = cell
        self.size = size
        self.ncells = ncells

    @classmethod
    def from_colors(cls, X: Graph) -> "ColoredPartition":
        n = X.n
        colors = X.colors if X.colors is not None else (0,) * n
        lab = sorted(range(n), key=lambda v: (colors[v], v))
        cell = [0] * n
        size = [0] * n
        ncells = 0
        start = 0
        for i in range(1, n + 1):
            if i == n or colors[lab[i]] != colors[lab[start]]:
                for j in range(start, i):
                    cell[lab[j]] = start
                size[start] = i - start
                ncells += 1
                start = i
        return cls(lab, cell, size, ncells)

    def copy(self) -> "ColoredPartition":
        return ColoredPartition(self.lab[:], self.cell[:], self.size[:], self.ncells)

    @property
    def cells(self) -> list[list[int]]:
        out = []
        i = 0
        while i < len(self.lab):
            out.append(self.lab[i:i + self.size[i]])
            i += self.size[i]
        return out

    def starts(self) -> list[int]:
        out = []
        i = 0
        while i < len(self.lab):
            out.append(i)
            i += self.size[i]
        return out

    def is_discrete(self) -> bool:
        return self.ncells == len(self.lab)

    def target_cell(self) -> int:
        """Start of the first smallest non-singleton cell."""
        best = None
        i = 0
        n = len(self.lab)
        while i < n:
            s = self.size[i]
            if s > 1 and (best is None or s < self.size[best]):
                best = i
            i += s
        return best

    def members(self, start: int) -> list[int]:
        return self.lab[start:start + self.size[start]]

    def individualize(self, start: int, v: int) -> None:
        members = self.members(start)
        rest = [x for x in members if x != v]
        self.lab[start] = v
        self.lab[start + 1:start + len(members)] = rest
        self.size[start] = 1
        self.size[start + 1] = len(rest)
        for x in rest:
            self.cell[x] = start + 1
        self.ncells += 1


def refine(X: Graph, P: ColoredPartition, queue_starts: list[int]) -> list[tuple]:
    """Refine ``P`` in place to the coarsest equitable refinement; return its trace."""
    trace: list[tuple] = []
    queue = deque(queue_starts)
    inq = set(queue_starts)
    lab, cell, size = P.lab, P.cell, P.size
    if X.directed:
        directions = (X._in, X.adjacency)
    else:
        directions = (X.adjacency,)
    while queue and not P.is_discrete():
        w = queue.popleft()
        inq.discard(w)
        splitter = lab[w:w + size[w]]
        for dir_index, rev in enumerate(directions):
            count: dict[int, int] = {}
            for x in splitter:
                for y in rev[x]:
                    count[y] = count.get(y, 0) + 1
            touched: dict[int, list[int]] = {}
            for y in count:
                touched.setdefault(cell[y], []).append(y)
            for c in sorted(touched):
                L = size[c]
                if L == 1:
                    continue
                hit = touched[c]
                if len(hit) == L:
                    first = count[hit[0]]
                    if all(count[y] == first for y in hit):
                        continue
                members = lab[c:c + L]
                members.sort(key=lambda y: count.get(y, 0))
                pieces = []
                start = c
                for k in range(1, L + 1):
                    if k == L or count.get(members[k], 0) != count.get(members[k - 1], 0):
                        pieces.append((start, k - (start - c), count.get(members[k - 1], 0)))
                        start = c + k
                lab[c:c + L] = members
                for ps, pl, _ in pieces:
                    size[ps] = pl
                    for y in lab[ps:ps + pl]:
                        cell[y] = ps
                P.ncells += len(pieces) - 1
                trace.append((dir_index, c, tuple((cnt, pl) for _, pl, cnt in pieces)))
                if c in inq:
                    new = [ps for ps, _, _ in pieces[1:]]
                else:
                    largest = max(range(len(pieces)), key=lambda k: (pieces[k][1], -k))
                    new = [ps for k, (ps, _, _) in enumerate(pieces) if k != largest]
                for ps in new:
                    if ps not in inq:
                        inq.add(ps)
                        queue.append(ps)
    return trace


def _root(X: Graph) -> tuple[ColoredPartition, list[tuple]]:
    P = ColoredPartition.from_colors(X)
    head = [("cells", tuple(P.size[s] for s in P.starts()))]
    return P, head + refine(X, P, P.starts())


@dataclass
class _FirstPath:
    nodes: list[ColoredPartition]
    traces: list[list[tuple]]
    targets: list[int]
    chosen: list[int]

    @property
    def leaf(self) -> list[int]:
        return self.nodes[-1].lab


def _first_path(X: Graph) -> _FirstPath:
    P, tr = _root(X)
    path = _FirstPath([P], [tr], [], [])
    while not P.is_discrete():
        c = P.target_cell()
        v = min(P.members(c))
        P = P.copy()
        P.individualize(c, v)
        tr = refine(X, P, [c])
        path.targets.append(c)
        path.chosen.append(v)
        path.nodes.append(P)
        path.traces.append(tr)
    return path


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.count = [1] * n

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        a, b = self.find(a), self.find(b)
        if a != b:
            if a > b:
                a, b = b, a
            self.parent[b] = a
            self.count[a] += self.count[b]

    def size(self, x: int) -> int:
        return self.count[self.find(x)]


@dataclass
class AutomorphismSearch:
    """Outcome of a search: generators, the first-path base and fundamental orbit lengths."""

    graph: Graph
    generators: list[Permutation]
    base: list[int]
    orbit_lengths: list[int]
    group: PermGroup
    nodes_visited: int

    @property
    def order(self) -> int:
        return math.prod(self.orbit_lengths)


def _check_bound(X: Graph, bound: int) -> None:
    if X.n > bound:
        raise VertexBoundError(f"graph has {X.n} vertices, bound is {bound}")


def search_automorphisms(X: Graph, vertex_bound: int = DEFAULT_VERTEX_BOUND) -> AutomorphismSearch:
    _check_bound(X, vertex_bound)
    n = X.n
    if n == 0:
        raise ValueError("empty graph")
    path = _first_path(X)
    leaf0 = path.leaf
    gens: list[Permutation] = []
    uf = _UnionFind(n)
    visited = [0]

    def leaf_map(lab: list[int]) -> Permutation:
        images = [0] * n
        for a, b in zip(leaf0, lab):
            images[a] = b
        return Permutation._unchecked(tuple(images))

    def dive(parent: ColoredPartition, level: int, v: int) -> Permutation | None:
        visited[0] += 1
        P = parent.copy()
        c = path.targets[level]
        P.individualize(c, v)
        if refine(X, P, [c]) != path.traces[level + 1]:
            return None
        if P.is_discrete():
            g = leaf_map(P.lab)
            return g if X.is_automorphism(g) else None
        for x in sorted(P.members(path.targets[level + 1])):
            g = dive(P, level + 1, x)
            if g is not None:
                return g
        return None

    orbit_lengths: list[int] = []
    for i in reversed(range(len(path.targets))):
        v0 = path.chosen[i]
        bad: set[int] = set()
        for w in sorted(path.nodes[i].members(path.targets[i])):
            if uf.find(w) == uf.find(v0) or uf.find(w) in bad:
                continue
            g = dive(path.nodes[i], i, w)
            if g is None:
                bad.add(uf.find(w))
                continue
            gens.append(g)
            for x in range(n):
                uf.union(x, g.images[x])
            bad = {uf.find(b) for b in bad}
        orbit_lengths.append(uf.size(v0))
    orbit_lengths.reverse()
    group = PermGroup(gens, n)
    search = AutomorphismSearch(X, gens, list(path.chosen), orbit_lengths, group, visited[0])
    if group.order != search.order:
        raise RuntimeError(
            f"search order {search.order} disagrees with Schreier-Sims order {group.order}")
    return search


def automorphism_group(X: Graph, vertex_bound: int = DEFAULT_VERTEX_BOUND) -> PermGroup:
    return search_automorphisms(X, vertex_bound).group


def are_isomorphic(X: Graph, Y: Graph, vertex_bound: int = DEFAULT_VERTEX_BOUND) -> Permutation | None:
    """An isomorphism ``X -> Y`` (as a permutation of ``range(n)``) or None."""
    _check_bound(X, vertex_bound)
    _check_bound(Y, vertex_bound)
    if (X.n != Y.n or X.directed != Y.directed or X.num_edges != Y.num_edges
            or (X.colors is None) != (Y.colors is None)):
        return None
    if sorted(map(len, X.adjacency)) != sorted(map(len, Y.adjacency)):
        return None
    if X.colors is not None and sorted(X.colors) != sorted(Y.colors):
        return None
    n = X.n
    px = _first_path(X)
    Py, try_ = _root(Y)
    if try_ != px.traces[0]:
        return None
    autY = automorphism_group(Y, vertex_bound)
    x_edges = X.edges()

    def check(lab: list[int]) -> Permutation | None:
        images = [0] * n
        for a, b in zip(px.leaf, lab):
            images[a] = b
        if X.colors is not None and any(X.colors[v] != Y.colors[images[v]] for v in range(n)):
            return None
        if all(Y.has_edge(images[u], images[v]) for u, v in x_edges):
            return Permutation._unchecked(tuple(images))
        return None

    def dfs(P: ColoredPartition, level: int, prefix: list[int]) -> Permutation | None:
        if P.is_discrete():
            return check(P.lab)
        c = px.targets[level]
        stab = autY.pointwise_stabilizer(prefix) if prefix else autY
        tried: set[int] = set()
        for w in sorted(P.members(c)):
            if w in tried:
                continue
            tried.update(stab.orbit(w))
            Q = P.copy()
            Q.individualize(c, w)
            if refine(Y, Q, [c]) != px.traces[level + 1]:
                continue
            found = dfs(Q, level + 1, prefix + [w])
            if found is not None:
                return found
        return None

    return dfs(Py, 0, [])
