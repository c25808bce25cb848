"""Finite simple graphs and digraphs, plus the structural primitives used by
the analysis: bipartiteness, girth, induced subgraphs, quotients over vertex
partitions and recognition of the small trees that occur as rigid cells.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .errors import InputError
from .permcore import Permutation


@dataclass(frozen=True)
class Graph:
    """Simple graph on ``range(n)``.

    ``adjacency[v]`` holds the sorted out-neighbours of ``v``; for undirected
    graphs the relation is symmetric.  ``colors`` optionally assigns an
    integer colour to each vertex.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    directed: bool = False
    colors: tuple[int, ...] | None = None
    _sets: tuple[frozenset, ...] = field(init=False, repr=False, compare=False)
    _in: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise InputError("adjacency length must equal n")
        if self.colors is not None and len(self.colors) != self.n:
            raise InputError("colors length must equal n")
        sets = []
        incoming: list[list[int]] = [[] for _ in range(self.n)]
        for v, nbrs in enumerate(self.adjacency):
            s = frozenset(nbrs)
            if len(s) != len(nbrs) or v in s or any(not 0 <= w < self.n for w in s):
                raise InputError(f"bad neighbourhood of vertex {v}")
            sets.append(s)
            for w in nbrs:
                incoming[w].append(v)
        if not self.directed:
            for v, s in enumerate(sets):
                if any(v not in sets[w] for w in s):
                    raise InputError("undirected adjacency is not symmetric")
        object.__setattr__(self, "_sets", tuple(sets))
        object.__setattr__(self, "_in", tuple(tuple(sorted(x)) for x in incoming))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], directed: bool = False,
                   colors: Sequence[int] | None = None) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = (int(x) for x in e)
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if v in adj[u]:
                raise InputError(f"duplicate edge {u}-{v}")
            adj[u].add(v)
            if not directed:
                adj[v].add(u)
        return cls(n, tuple(tuple(sorted(a)) for a in adj), directed,
                   None if colors is None else tuple(int(c) for c in colors))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        """Undirected: pairs ``u < v``.  Directed: all arcs."""
        if self.directed:
            return [(u, v) for u in range(self.n) for v in self.adjacency[u]]
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u]]

    @property
    def num_edges(self) -> int:
        return len(self.edges())

    def is_regular(self, k: int) -> bool:
        return all(len(a) == k for a in self.adjacency)

    def is_cubic(self) -> bool:
        return self.is_regular(3)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(self.component_of(0)) == self.n

    def component_of(self, v: int) -> set[int]:
        """Weak component containing ``v``."""
        seen = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in self.adjacency[x] + self._in[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for v in range(self.n):
            if v not in seen:
                comp = self.component_of(v)
                seen |= comp
                out.append(sorted(comp))
        return out

    def is_automorphism(self, p: Permutation) -> bool:
        if p.degree != self.n:
            return False
        img = p.images
        if self.colors is not None and any(self.colors[img[v]] != self.colors[v] for v in range(self.n)):
            return False
        sets = self._sets
        for u in range(self.n):
            su = sets[img[u]]
            if len(su) != len(self.adjacency[u]):
                return False
            for v in self.adjacency[u]:
                if img[v] not in su:
                    return False
        return True

    def relabel(self, p: Permutation) -> "Graph":
        """Image of the graph under the vertex bijection ``p``."""
        img = p.images
        colors = None
        if self.colors is not None:
            colors = [0] * self.n
            for v in range(self.n):
                colors[img[v]] = self.colors[v]
        return Graph.from_edges(self.n, [(img[u], img[v]) for u, v in self.edges()],
                                self.directed, colors)


def _require_undirected(X: Graph, what: str) -> None:
    if X.directed:
        raise InputError(f"{what} is defined for undirected graphs only")


def is_bipartite(X: Graph) -> tuple[list[int], list[int]] | None:
    """A bipartition ``(side0, side1)`` or None.  Vertex 0's component goes to side 0 first."""
    _require_undirected(X, "is_bipartite")
    color = [-1] * X.n
    for s in range(X.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in X.adjacency[x]:
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    return ([v for v in range(X.n) if color[v] == 0],
            [v for v in range(X.n) if color[v] == 1])


def girth(X: Graph) -> float:
    """Length of a shortest cycle (``float('inf')`` for forests)."""
    _require_undirected(X, "girth")
    best = float("inf")
    for s in range(X.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] >= best:
                break
            for y in X.adjacency[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def distances_from(X: Graph, s: int) -> dict[int, int]:
    dist = {s: 0}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for y in X.adjacency[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def induced_subgraph(X: Graph, S: Iterable[int]) -> tuple[Graph, list[int]]:
    """``X[S]`` relabelled to ``range(len(S))``; also returns new->old labels."""
    verts = sorted(set(S))
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[u], index[v]) for u in verts for v in X.adjacency[u]
             if v in index and (X.directed or u < v)]
    colors = None if X.colors is None else [X.colors[v] for v in verts]
    return Graph.from_edges(len(verts), edges, X.directed, colors), verts


@dataclass(frozen=True)
class QuotientGraph:
    """Quotient of a graph over a vertex partition.

    Loops are not kept: a cell spanning an edge of the original graph gets
    ``has_inner_edge[i] = True`` instead.  ``multiplicity`` counts the
    original edges between two distinct cells.
    """

    graph: Graph
    cells: tuple[tuple[int, ...], ...]
    has_inner_edge: tuple[bool, ...]
    multiplicity: dict[tuple[int, int], int]


def quotient(X: Graph, partition: Iterable[Iterable[int]]) -> QuotientGraph:
    cells = tuple(tuple(sorted(c)) for c in partition)
    cell_of = [-1] * X.n
    for i, c in enumerate(cells):
        for v in c:
            if not 0 <= v < X.n or cell_of[v] >= 0:
                raise InputError("cells do not partition the vertex set")
            cell_of[v] = i
    if any(c < 0 for c in cell_of) or any(len(c) == 0 for c in cells):
        raise InputError("cells do not partition the vertex set")
    inner = [False] * len(cells)
    mult: Counter = Counter()
    for u, v in X.edges():
        a, b = cell_of[u], cell_of[v]
        if a == b:
            inner[a] = True
        else:
            mult[(a, b) if X.directed else (min(a, b), max(a, b))] += 1
    graph = Graph.from_edges(len(cells), sorted(mult), X.directed)
    return QuotientGraph(graph, cells, tuple(inner), dict(sorted(mult.items())))


class TreeShape(Enum):
    VERTEX = "vertex"
    I = "I"
    Y = "Y"
    H = "H"
    A = "A"
    B = "B"
    OTHER = "other"


def _diameter(X: Graph) -> int:
    return max(max(distances_from(X, v).values()) for v in range(X.n))


def classify_tree_shape(X: Graph) -> TreeShape:
    """Match a connected graph against the rigid-cell tree templates.

    VERTEX and I are the one- and two-vertex trees, Y the claw, H two adjacent
    degree-3 centres with four leaves, A the depth-2 tree of a cubic vertex
    (10 vertices), B the A-tree with one leaf pair removed (8 vertices).
    """
    if X.n == 0 or not X.is_connected():
        raise InputError("tree shape needs a connected, non-empty graph")
    if X.directed:
        raise InputError("tree shape is defined for undirected graphs")
    if X.num_edges != X.n - 1:
        return TreeShape.OTHER
    degrees = sorted((X.degree(v) for v in range(X.n)), reverse=True)
    if X.n == 1:
        return TreeShape.VERTEX
    if X.n == 2:
        return TreeShape.I
    templates = {
        4: ([3, 1, 1, 1], 2, TreeShape.Y),
        6: ([3, 3, 1, 1, 1, 1], 3, TreeShape.H),
        8: ([3, 3, 3] + [1] * 5, 4, TreeShape.B),
        10: ([3, 3, 3, 3] + [1] * 6, 4, TreeShape.A),
    }
    if X.n in templates:
        degs, diam, shape = templates[X.n]
        if degrees == degs and _diameter(X) == diam:
            return shape
    return TreeShape.OTHER
