"""Vertex-critical signed graphs and critical-subgraph extraction.

A signed graph with chromatic number k is critical when deleting any single
vertex drops the chromatic number. Deletion can only reach k or k-1, so the
per-vertex deletion values form a compact certificate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import SignedGraph, TheoremViolationError, delete_vertex, is_balanced
from .coloring import CYCLIC, _check_model, chromatic_number


@dataclass(frozen=True)
class CriticalityCertificate:
    """Chromatic number ``k`` plus the value after each single-vertex deletion.

    Every entry lies in {k, k-1}; the constructor enforces this, so a
    certificate that exists is internally consistent. The graph is critical
    exactly when every entry is k-1.
    """

    model: str
    k: int
    per_vertex: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_model(self.model)
        for v, value in enumerate(self.per_vertex):
            if value not in (self.k, self.k - 1):
                raise TheoremViolationError(
                    f"deleting vertex {v} gave chromatic number {value}, "
                    f"outside {{{self.k}, {self.k - 1}}}"
                )

    @property
    def critical(self) -> bool:
        return all(value == self.k - 1 for value in self.per_vertex)


def is_critical(sg: SignedGraph, model: str) -> tuple[bool, CriticalityCertificate]:
    """Decide vertex-criticality; requires at least one vertex."""
    _check_model(model)
    n = sg.graph.vertex_count
    if n == 0:
        raise ValueError("criticality is undefined for the empty graph")
    k = chromatic_number(sg, model)
    values = []
    for u in range(n):
        smaller, _ = delete_vertex(sg, u)
        values.append(chromatic_number(smaller, model))
    certificate = CriticalityCertificate(model, k, tuple(values))
    return certificate.critical, certificate


def extract_critical_subgraph(sg: SignedGraph, i: int, model: str) -> tuple[int, ...]:
    """Vertices of an induced i-critical subgraph, as original indices.

    Greedy descent: repeatedly delete the smallest-index vertex whose removal
    keeps the chromatic number at least ``i``. What remains induces an
    i-critical signed subgraph. Requires ``1 <= i <= chromatic_number(sg)``.
    """
    _check_model(model)
    k = chromatic_number(sg, model)
    if not 1 <= i <= k:
        raise ValueError(f"target {i} outside 1..{k}")
    current = sg
    alive = list(range(sg.graph.vertex_count))
    while True:
        for j in range(current.graph.vertex_count):
            smaller, _ = delete_vertex(current, j)
            if chromatic_number(smaller, model) >= i:
                current = smaller
                del alive[j]
                break
        else:
            return tuple(alive)


def _circuit_order(sg: SignedGraph) -> list[int] | None:
    # vertex sequence around a circuit, or None if the graph is not one
    graph = sg.graph
    n = graph.vertex_count
    if n < 3 or graph.edge_count != n or not graph.is_connected:
        return None
    if any(graph.degree(v) != 2 for v in range(n)):
        return None
    order = [0]
    previous, at = -1, 0
    while len(order) < n:
        a, b = graph.neighbors(at)
        previous, at = at, b if a == previous else a
        order.append(at)
    return order


def classify_small_critical(sg: SignedGraph, model: str) -> str:
    """Structural label for a critical signed graph with k <= 3.

    Cyclic model: "K1", "K2", or "odd_circuit". Symmetric model: "K1",
    "K2", "balanced_odd_circuit", or "unbalanced_even_circuit". Raises
    ``ValueError`` when the input is not critical or k exceeds 3, and
    ``TheoremViolationError`` when a critical graph fails to match the
    shape guaranteed for its k, which would mean a solver bug.
    """
    critical, certificate = is_critical(sg, model)
    if not critical:
        raise ValueError("graph is not vertex-critical")
    k = certificate.k
    if k > 3:
        raise ValueError(f"no structural classification for k = {k}")
    graph = sg.graph
    if k == 1:
        if graph.vertex_count == 1 and graph.edge_count == 0:
            return "K1"
        raise TheoremViolationError("1-critical graph is not a single vertex")
    if k == 2:
        if graph.vertex_count == 2 and graph.edge_count == 1:
            return "K2"
        raise TheoremViolationError("2-critical graph is not a single edge")
    circuit = _circuit_order(sg)
    if model == CYCLIC:
        if circuit is not None and graph.vertex_count % 2 == 1:
            return "odd_circuit"
        raise TheoremViolationError("cyclic 3-critical graph is not an odd circuit")
    if circuit is not None:
        balanced = is_balanced(sg)[0]
        odd = graph.vertex_count % 2 == 1
        if balanced and odd:
            return "balanced_odd_circuit"
        if not balanced and not odd:
            return "unbalanced_even_circuit"
    raise TheoremViolationError(
        "symmetric 3-critical graph is neither a balanced odd circuit "
        "nor an unbalanced even circuit"
    )
