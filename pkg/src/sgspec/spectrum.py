"""Chromatic spectra over the switching classes of a graph.

A graph with m edges, n vertices and c components has exactly 2^(m-n+c)
switching classes: fix a spanning forest, switch every class so the forest
edges are positive, and the co-tree signs distinguish the classes. The
spectrum collects the chromatic number of every class.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .core import Graph, Signature, SignedGraph, is_balanced, spanning_forest
from .coloring import SYMMETRIC, _check_model, chromatic_number


@dataclass(frozen=True)
class SpectrumReport:
    """Chromatic numbers of every switching class of one graph, one model.

    ``classes`` pairs each canonical class representative with its chromatic
    number, in enumeration order. ``spectrum`` is the sorted set of values,
    ``m`` and ``M`` its extremes, and ``interval_ok`` records whether every
    intermediate value is attained.
    """

    graph: Graph
    model: str
    classes: tuple[tuple[Signature, int], ...]
    spectrum: tuple[int, ...]
    m: int
    M: int
    interval_ok: bool


def signature_class_representatives(graph: Graph, *, max_cotree: int = 20) -> list[Signature]:
    """One canonical signature per switching class.

    The spanning-forest edges are positive in every representative; the
    co-tree edges (ascending edge index) run through all sign vectors in
    binary counting order, bit value 0 meaning +1. Raises ``ValueError``
    when the co-tree has more than ``max_cotree`` edges rather than attempt
    an enumeration that cannot finish.
    """
    tree = set(spanning_forest(graph))
    cotree = [e for e in range(graph.edge_count) if e not in tree]
    if len(cotree) > max_cotree:
        raise ValueError(
            f"co-tree has {len(cotree)} edges; 2^{len(cotree)} classes exceed "
            f"the cap of 2^{max_cotree} (raise max_cotree to override)"
        )
    base = [1] * graph.edge_count
    out: list[Signature] = []
    for mask in range(1 << len(cotree)):
        signs = base.copy()
        for bit, e in enumerate(cotree):
            if (mask >> bit) & 1:
                signs[e] = -1
        out.append(Signature(tuple(signs)))
    return out


def _class_value(payload: tuple[Graph, Signature, str]) -> int:
    graph, signature, model = payload
    return chromatic_number(SignedGraph(graph, signature), model)


def chromatic_spectrum(
    graph: Graph,
    model: str,
    *,
    max_cotree: int = 20,
    jobs: int = 1,
) -> SpectrumReport:
    """Evaluate every switching class of ``graph`` under ``model``.

    With ``jobs > 1`` classes are evaluated in a process pool; results are
    collected in enumeration order either way, so the report is identical.
    """
    _check_model(model)
    reps = signature_class_representatives(graph, max_cotree=max_cotree)
    if jobs > 1 and len(reps) > 1:
        chunk = max(1, len(reps) // (jobs * 8))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            values = list(
                pool.map(_class_value, ((graph, s, model) for s in reps), chunksize=chunk)
            )
    else:
        values = [chromatic_number(SignedGraph(graph, s), model) for s in reps]
    spectrum = tuple(sorted(set(values)))
    low, high = spectrum[0], spectrum[-1]
    return SpectrumReport(
        graph=graph,
        model=model,
        classes=tuple(zip(reps, values)),
        spectrum=spectrum,
        m=low,
        M=high,
        interval_ok=spectrum == tuple(range(low, high + 1)),
    )


def min_chromatic_shortcut(graph: Graph, model: str) -> int:
    """Minimum of the spectrum without enumerating classes.

    Cyclic: 1 for edgeless graphs, 2 when bipartite, else 3. Symmetric: 1
    for edgeless graphs, else 2. Undefined (ValueError) on zero vertices.
    """
    _check_model(model)
    if graph.vertex_count == 0:
        raise ValueError("minimum chromatic number is undefined without vertices")
    if graph.edge_count == 0:
        return 1
    if model == SYMMETRIC:
        return 2
    # odd circuits are exactly the negative circuits of the all-negative
    # signature, so bipartite == that signature is balanced
    bipartite = is_balanced(SignedGraph.all_negative(graph))[0]
    return 2 if bipartite else 3
