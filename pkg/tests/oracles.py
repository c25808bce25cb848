"""Brute-force reference computations, independent of the package internals.

Everything here works on plain tuples and edge lists so that a bug in the
library cannot leak into its own oracle.
"""

from __future__ import annotations

from itertools import product


def adjacency_sets(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def count_automorphisms(n, edges):
    """Number of adjacency-preserving bijections, by plain backtracking.

    Vertices are assigned in index order; a partial map is extended only if
    adjacency and non-adjacency with every earlier vertex is preserved and
    degrees match.
    """
    adj = adjacency_sets(n, edges)
    deg = [len(a) for a in adj]
    image = [-1] * n
    used = [False] * n

    def extend(i):
        if i == n:
            return 1
        total = 0
        for t in range(n):
            if used[t] or deg[t] != deg[i]:
                continue
            if all((j in adj[i]) == (image[j] in adj[t]) for j in range(i)):
                image[i], used[t] = t, True
                total += extend(i + 1)
                used[t] = False
        return total

    return extend(0)


def closure_order(gens):
    """Order of the group generated by image tuples (right action, x then g)."""
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    stack = [ident]
    while stack:
        x = stack.pop()
        for g in gens:
            y = tuple(g[i] for i in x)
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen)


def cycle_lengths(n, edges):
    """Set of lengths of all simple cycles (exhaustive DFS, small graphs only)."""
    adj = adjacency_sets(n, edges)
    lengths = set()

    def dfs(start, v, visited, depth):
        for w in adj[v]:
            if w == start and depth >= 3:
                lengths.add(depth)
            elif w > start and w not in visited:
                visited.add(w)
                dfs(start, w, visited, depth + 1)
                visited.remove(w)

    for s in range(n):
        dfs(s, s, {s}, 1)
    return lengths


def brute_girth(n, edges):
    lengths = cycle_lengths(n, edges)
    return min(lengths) if lengths else float("inf")


def brute_bipartite(n, edges):
    """True iff some 2-colouring of the vertices is proper (all colourings tried)."""
    for colours in product((0, 1), repeat=n - 1):
        c = (0,) + colours
        if all(c[u] != c[v] for u, v in edges):
            return True
    return n == 0


def metacyclic_involutions(u, m=8):
    """Involutions in <r, s | r^m = s^2 = 1, s r s = r^u>, from normal forms r^i s^j.

    s r^i = r^(u*i) s, so (r^i s^a)(r^j s^b) = r^(i + u^a * j) s^(a+b).
    """
    def mul(x, y):
        (i, a), (j, b) = x, y
        return ((i + pow(u, a, m) * j) % m, (a + b) % 2)

    elements = [(i, a) for i in range(m) for a in range(2)]
    return sum(1 for x in elements if x != (0, 0) and mul(x, x) == (0, 0))


def s_arc_orbit_count(n, edges, elements, s):
    """Number of orbits of a group (given as all image tuples) on s-arcs."""
    adj = adjacency_sets(n, edges)
    arcs = [(v,) for v in range(n)]
    for _ in range(s):
        arcs = [a + (w,) for a in arcs for w in adj[a[-1]] if len(a) < 2 or w != a[-2]]
    seen = set()
    orbits = 0
    for a in arcs:
        if a in seen:
            continue
        orbits += 1
        for g in elements:
            seen.add(tuple(g[x] for x in a))
    return orbits


def parity_by_inversions(images):
    """0 for even, 1 for odd, counting inversions."""
    inv = 0
    for i in range(len(images)):
        for j in range(i + 1, len(images)):
            inv += images[i] > images[j]
    return inv % 2
