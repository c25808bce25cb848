"""Graph constructors: LCF codes, generalized Petersen graphs, Cayley and Haar
graphs, a registry of named cubic symmetric graphs, and corpus loading.

Census names (``F010A`` and so on) follow the Foster census.  A census name
is attached to a construction only where the order alone pins the graph down
(one census graph of that order) or the construction is the classical one.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from pathlib import Path
from typing import Callable, Iterable, Sequence

from .errors import GraphFormatError, InputError
from .graphcore import Graph
from .graphio import read_graph
from .permcore import Permutation

log = logging.getLogger(__name__)


# -- LCF ---------------------------------------------------------------------


@dataclass(frozen=True)
class LcfCode:
    shifts: tuple[int, ...]
    exponent: int = 1

    def __post_init__(self):
        if self.exponent < 1 or not self.shifts or any(s == 0 for s in self.shifts):
            raise InputError("LCF code needs exponent >= 1 and non-zero shifts")

    @property
    def order(self) -> int:
        return len(self.shifts) * self.exponent

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.shifts)) + "]" + (
            f"^{self.exponent}" if self.exponent != 1 else "")


_LCF_RE = re.compile(r"^\s*\[([-+\d,\s]+)\]\s*(?:\^\s*(\d+))?\s*$")


def parse_lcf(text: str) -> LcfCode:
    m = _LCF_RE.match(text)
    if not m:
        raise InputError(f"cannot parse LCF code {text!r}")
    shifts = tuple(int(x) for x in m.group(1).replace(",", " ").split())
    return LcfCode(shifts, int(m.group(2) or 1))


def lcf(code: LcfCode | str) -> Graph:
    """Hamiltonian cycle ``0..N-1`` plus chords ``i -- i + shift``."""
    if isinstance(code, str):
        code = parse_lcf(code)
    N = code.order
    shifts = list(code.shifts) * code.exponent
    cycle = {frozenset((i, (i + 1) % N)) for i in range(N)}
    if len(cycle) != N:
        raise InputError("LCF cycle too short")
    chords = set()
    for i, s in enumerate(shifts):
        j = (i + s) % N
        e = frozenset((i, j))
        if i == j or e in cycle:
            raise InputError(f"LCF chord {i}-{j} collides with the Hamiltonian cycle")
        if (j + shifts[j]) % N != i:
            raise InputError(f"LCF chord {i}-{j} is not matched at {j}: result is not cubic")
        chords.add(e)
    X = Graph.from_edges(N, sorted(tuple(sorted(e)) for e in cycle | chords))
    if not X.is_cubic():
        raise InputError("LCF code does not give a cubic graph")
    return X


# -- families ------------------------------------------------------------------


def generalized_petersen(n: int, k: int) -> Graph:
    """GP(n, k): outer n-cycle ``0..n-1``, inner vertices ``n..2n-1``, spokes ``i -- n+i``."""
    if n < 3 or not 1 <= k < n / 2:
        raise InputError(f"GP({n},{k}) needs n >= 3 and 1 <= k < n/2")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    edges += [(n + i, n + (i + k) % n) for i in range(n)]
    return Graph.from_edges(2 * n, edges)


def cyclic_group(n: int) -> list[Permutation]:
    """Z_n in its regular representation; element ``k`` is translation by ``k``."""
    return [Permutation._unchecked(tuple((i + k) % n for i in range(n))) for k in range(n)]


def abelian_group(moduli: Sequence[int]) -> list[Permutation]:
    """Z_{m1} x ... x Z_{mr} regularly, elements in lexicographic tuple order."""
    tuples = list(product(*(range(m) for m in moduli)))
    index = {t: i for i, t in enumerate(tuples)}
    out = []
    for a in tuples:
        out.append(Permutation._unchecked(tuple(
            index[tuple((x + y) % m for x, y, m in zip(t, a, moduli))] for t in tuples)))
    return out


def dihedral_group(n: int) -> list[Permutation]:
    """D_{2n} regularly: element ``r^i s^e`` sits at index ``i + n*e``."""
    def mul(a, b):
        (i, e), (j, f) = a, b
        return ((i + (-j if e else j)) % n, e ^ f)
    elems = [(i, e) for e in (0, 1) for i in range(n)]
    index = {x: k for k, x in enumerate(elems)}
    # right regular action: x -> x * g
    return [Permutation._unchecked(tuple(index[mul(x, g)] for x in elems)) for g in elems]


def cayley_graph(elements: Sequence[Permutation], connection: Iterable[Permutation]) -> Graph:
    """Cay(G, S) on the listed elements of G, with ``x ~ x*s`` for ``s`` in S.

    ``elements`` must be closed under multiplication; ``S`` must be
    inverse-closed and avoid the identity.
    """
    elements = list(elements)
    index = {g: i for i, g in enumerate(elements)}
    S = set(connection)
    for s in S:
        if s not in index:
            raise InputError("connection element not in the group")
        if s.is_identity():
            raise InputError("connection set contains the identity")
        if s.inverse() not in S:
            raise InputError("connection set is not closed under inverses")
    edges = set()
    for x in elements:
        for s in S:
            y = x * s
            if y not in index:
                raise InputError("element list is not closed under multiplication")
            edges.add((min(index[x], index[y]), max(index[x], index[y])))
    return Graph.from_edges(len(elements), sorted(edges))


def left_translations(elements: Sequence[Permutation]) -> list[Permutation]:
    """Vertex permutations ``x -> g*x`` of a Cayley graph built by :func:`cayley_graph`."""
    index = {g: i for i, g in enumerate(elements)}
    return [Permutation._unchecked(tuple(index[g * x] for x in elements)) for g in elements]


def haar_graph(n: int, symbol: Iterable[int]) -> Graph:
    """Bipartite Haar graph H(Z_n, S): ``(i, 0) ~ (i + s, 1)`` for s in S.

    Vertex ``i`` is ``(i, 0)``, vertex ``n + i`` is ``(i, 1)``.
    """
    S = sorted({s % n for s in symbol})
    return Graph.from_edges(2 * n, [(i, n + (i + s) % n) for i in range(n) for s in S])


def hex_torus(b: int) -> Graph:
    """Haar graph of Z_b x Z_b with symbol {0, e1, e2} (hexagonal tiling of the torus)."""
    pts = [(x, y) for x in range(b) for y in range(b)]
    idx = {p: i for i, p in enumerate(pts)}
    N = len(pts)
    edges = set()
    for (x, y) in pts:
        for dx, dy in ((0, 0), (1, 0), (0, 1)):
            edges.add((idx[(x, y)], N + idx[((x + dx) % b, (y + dy) % b)]))
    return Graph.from_edges(2 * N, sorted(edges))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def prism(n: int) -> Graph:
    return generalized_petersen(n, 1)


FANO_LINES = ((0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5))


def coxeter_graph() -> Graph:
    """Triples of a 7-set that are not Fano lines, adjacent when disjoint."""
    from itertools import combinations
    lines = {frozenset(l) for l in FANO_LINES}
    verts = [frozenset(t) for t in combinations(range(7), 3) if frozenset(t) not in lines]
    edges = [(i, j) for i in range(len(verts)) for j in range(i + 1, len(verts))
             if not verts[i] & verts[j]]
    return Graph.from_edges(len(verts), edges)


def petersen_kneser() -> Graph:
    """Petersen graph as 2-subsets of {0..4}, adjacent when disjoint (vertex order lexicographic)."""
    from itertools import combinations
    verts = [frozenset(t) for t in combinations(range(5), 2)]
    edges = [(i, j) for i in range(10) for j in range(i + 1, 10) if not verts[i] & verts[j]]
    return Graph.from_edges(10, edges)


def _dihedrant_r(n: int) -> int:
    for r in range(2, n):
        if (r * r - r + 1) % n == 0:
            return r
    raise InputError(f"no r with r^2 - r + 1 = 0 mod {n}")


def symmetric_haar(n: int) -> Graph:
    """Cubic symmetric Haar graph H(Z_n, {0, 1, r}) with r^2 - r + 1 = 0 (mod n)."""
    return haar_graph(n, (0, 1, _dihedrant_r(n)))


# -- registry ------------------------------------------------------------------


def bundled_corpus_dir() -> Path:
    """Directory of the fixture corpus shipped with the package."""
    return Path(__file__).resolve().parent / "data" / "corpus"


def _bundled(name: str) -> Callable[[], Graph]:
    def load() -> Graph:
        path = bundled_corpus_dir() / f"{name}.g6"
        if not path.exists():
            raise InputError(f"data file for {name} is not installed")
        return read_graph(path)
    return load


_REGISTRY: dict[str, Callable[[], Graph]] = {
    "K4": lambda: complete_graph(4),
    "K33": lambda: complete_bipartite(3, 3),
    "F004A": lambda: complete_graph(4),
    "F006A": lambda: complete_bipartite(3, 3),
    "F008A": lambda: lcf("[3,-3]^4"),
    "F010A": lambda: generalized_petersen(5, 2),
    "F014A": lambda: lcf("[5,-5]^7"),
    "F016A": lambda: lcf("[5,-5]^8"),
    "F018A": lambda: lcf("[5,7,-7,7,-7,-5]^3"),
    "F020A": lambda: generalized_petersen(10, 2),
    "F020B": lambda: generalized_petersen(10, 3),
    "F024A": lambda: generalized_petersen(12, 5),
    "F026A": lambda: symmetric_haar(13),
    "F028A": coxeter_graph,
    "F030A": lambda: lcf("[-13,-9,7,-7,9,13]^5"),
    "F032A": lambda: lcf("[5,-5,13,-13]^8"),
    "F038A": lambda: symmetric_haar(19),
    "F042A": lambda: symmetric_haar(21),
    "F048A": lambda: generalized_petersen(24, 5),
    "F062A": lambda: symmetric_haar(31),
    "F074A": lambda: symmetric_haar(37),
    "F086A": lambda: symmetric_haar(43),
    "F090A": lambda: lcf("[17,-9,37,-37,9,-17]^15"),
    # coset graphs of PSL(2,17), PGL(2,11), PGL(2,13), PSL(3,3):2 and PSL(2,23)
    "F102A": _bundled("F102A"),
    "F110A": _bundled("F110A"),
    "F182D": _bundled("F182D"),
    "F234B": _bundled("F234B"),
    "F506A": _bundled("F506A"),
}

ALIASES = {
    "PETERSEN": "F010A", "HEAWOOD": "F014A", "MOBIUS-KANTOR": "F016A", "PAPPUS": "F018A",
    "DODECAHEDRON": "F020A", "DESARGUES": "F020B", "NAURU": "F024A", "COXETER": "F028A",
    "TUTTE8": "F030A", "DYCK": "F032A", "FOSTER": "F090A", "CUBE": "F008A", "Q3": "F008A",
    "K3,3": "K33", "BIGGS-SMITH": "F102A",
}


def register(name: str, builder: Callable[[], Graph]) -> None:
    _REGISTRY[name.upper()] = builder


def registry_names() -> list[str]:
    return sorted(_REGISTRY)


@lru_cache(maxsize=None)
def named(name: str) -> Graph:
    key = name.strip().upper()
    key = ALIASES.get(key, key)
    if key not in _REGISTRY:
        raise InputError(f"unknown graph name {name!r}")
    X = _REGISTRY[key]()
    if not (X.is_cubic() and X.is_connected()):
        raise InputError(f"registry entry {key} is not a connected cubic graph")
    return X


# -- corpus --------------------------------------------------------------------


@dataclass
class CorpusLoad:
    graphs: list[tuple[str, Graph]]
    errors: list[tuple[str, str]]


CORPUS_SUFFIXES = (".g6", ".edges", ".txt", ".el")


def load_corpus(directory: str | Path) -> CorpusLoad:
    """Load every graph file in ``directory``; failures are collected per file."""
    directory = Path(directory)
    if not directory.is_dir():
        raise InputError(f"{directory} is not a directory")
    graphs, errors = [], []
    for path in sorted(directory.iterdir()):
        if not path.is_file() or path.suffix not in CORPUS_SUFFIXES:
            continue
        gid = path.stem
        try:
            X = read_graph(path)
        except GraphFormatError as exc:
            errors.append((gid, str(exc)))
            continue
        if not X.is_cubic():
            errors.append((gid, f"{path.name}: graph is not cubic"))
        elif not X.is_connected():
            errors.append((gid, f"{path.name}: graph is not connected"))
        else:
            graphs.append((gid, X))
    if not graphs and not errors:
        log.warning("corpus directory %s holds no graph files", directory)
    return CorpusLoad(graphs, errors)
