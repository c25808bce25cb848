"""Whole-graph analysis: the document behind ``oddaut analyze`` and ``oddaut batch``."""

from __future__ import annotations

import time
from collections import Counter, defaultdict
from dataclasses import dataclass
from pathlib import Path

from .autsearch import DEFAULT_VERTEX_BOUND, automorphism_group
from .constructors import load_corpus
from .errors import ClassificationError, InputError, ResourceBoundError
from .graphcore import Graph, girth
from .oddness import cross_validate
from .permcore import DEFAULT_ENUMERATION_BOUND
from .rigid import rigid_cells
from .symclass import arc_regularity_level, girth_type_check, stabilizer_structures, type_label

SCHEMA_VERSION = 1
RIGID_DEFAULT_MAX_ORDER = 1000


@dataclass(frozen=True)
class AnalysisOptions:
    rigid: bool | None = None  # None: only when |Aut| <= RIGID_DEFAULT_MAX_ORDER
    max_group_order: int = DEFAULT_ENUMERATION_BOUND
    vertex_bound: int = DEFAULT_VERTEX_BOUND
    timing: bool = False


def rigid_summary(X: Graph, G, s: int, label: str, bound: int) -> list[dict]:
    """Rigid cells of every automorphism of order 2, 3, 4 or 6 fixing a vertex,
    grouped by (order, number of fixed vertices, cell shapes)."""
    classes: dict[tuple, dict] = {}
    for g in G.elements(bound):
        if g.order not in (2, 3, 4, 6) or not g.fixed_points():
            continue
        r = rigid_cells(X, g, s, label)
        shapes = tuple(sorted(Counter(sh.value for sh in r.shapes.elements()).items()))
        key = (g.order, r.fixed_count, shapes)
        entry = classes.get(key)
        if entry is None:
            classes[key] = {"order": g.order, "fixed_count": r.fixed_count,
                            "shapes": dict(shapes), "count": 1, "legal": r.all_templates_legal,
                            "example": r.to_json()}
        else:
            entry["count"] += 1
            entry["legal"] = entry["legal"] and r.all_templates_legal
    return [classes[k] for k in sorted(classes)]


def analyze(X: Graph, graph_id: str, options: AnalysisOptions = AnalysisOptions()) -> dict:
    start = time.perf_counter()
    if X.directed or not X.is_cubic():
        raise InputError("graph is not cubic")
    if not X.is_connected():
        raise InputError("graph is not connected")
    G = automorphism_group(X, options.vertex_bound)
    if G.order > options.max_group_order:
        raise ResourceBoundError(
            f"|Aut| = {G.order} exceeds --max-group-order {options.max_group_order}")
    s = arc_regularity_level(X, G)
    stab = stabilizer_structures(X, G, s)
    evidence = type_label(X, G, s)
    report = cross_validate(X, G, evidence, options.vertex_bound, options.max_group_order)
    label = str(evidence.label)
    run_rigid = options.rigid if options.rigid is not None else G.order <= RIGID_DEFAULT_MAX_ORDER
    g = girth(X)
    doc = {
        "schema": SCHEMA_VERSION,
        "id": graph_id,
        "order": X.n,
        "girth": g if g != float("inf") else None,
        "bipartite": report.bipartite,
        "aut_order": G.order,
        "s": s,
        "type": label,
        "girth_violation": girth_type_check(X, evidence.label),
        "regular_subgroups": {str(lv): sorted(r.token for r in rs)
                              for lv, rs in evidence.records.items()},
        "stabilizers": {"vertex": stab.vertex_label, "edge": stab.edge_label},
        "oddness": report.to_json(),
        "rigid": rigid_summary(X, G, s, label, options.max_group_order) if run_rigid else None,
        "agree": report.agree,
    }
    if options.timing:
        doc["timing_seconds"] = round(time.perf_counter() - start, 3)
    return doc


def error_document(graph_id: str, exc: Exception) -> dict:
    return {"schema": SCHEMA_VERSION, "id": graph_id, "error": f"{type(exc).__name__}: {exc}"}


def _batch_worker(args: tuple[str, Graph, AnalysisOptions]) -> dict:
    gid, X, options = args
    try:
        return analyze(X, gid, options)
    except (InputError, ResourceBoundError, ClassificationError) as exc:
        return error_document(gid, exc)


def batch(directory: str | Path, options: AnalysisOptions = AnalysisOptions(),
          jobs: int = 1) -> tuple[list[dict], dict]:
    """Analyze every graph file in ``directory``; output is sorted by id."""
    corpus = load_corpus(directory)
    docs = [error_document(gid, InputError(msg)) for gid, msg in corpus.errors]
    tasks = [(gid, X, options) for gid, X in corpus.graphs]
    if jobs > 1 and len(tasks) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            docs.extend(pool.map(_batch_worker, tasks))
    else:
        docs.extend(map(_batch_worker, tasks))
    docs.sort(key=lambda d: d["id"])
    summary: defaultdict[str, int] = defaultdict(int)
    for d in docs:
        key = "error" if "error" in d else ("agree" if d["agree"] else "disagree")
        summary[key] += 1
    return docs, {k: summary[k] for k in ("agree", "disagree", "error")}
