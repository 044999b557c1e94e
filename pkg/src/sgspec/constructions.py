"""Constructive steps behind the interval results, as checked algorithms.

``extend_coloring`` turns a (k-2)-coloring of a vertex-deleted signed graph
into a (k-1)-coloring of the whole graph, which is the step that walks a
chromatic spectrum downward. ``lift_signature`` extends a signature from an
induced subgraph to the whole graph without changing the chromatic number,
which walks it upward from a critical core. Both validate their own output
and raise ``TheoremViolationError`` if the guarantee ever fails, so a bug
cannot slip through silently.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .core import (
    Graph,
    Signature,
    SignedGraph,
    TheoremViolationError,
    delete_vertex,
)
from .coloring import (
    CYCLIC,
    Coloring,
    Palette,
    _check_model,
    chromatic_number,
    validate_coloring,
)


def extend_coloring(sg: SignedGraph, u: int, phi: Sequence[int], k: int, model: str) -> Coloring:
    """Grow a (k-2)-coloring of ``sg`` minus ``u`` into a (k-1)-coloring of ``sg``.

    ``phi`` is indexed by the compacted vertices of ``delete_vertex(sg, u)``
    and must be valid for the size-(k-2) palette; ``k >= 3``. The returned
    coloring is indexed by the vertices of ``sg`` and is validated against
    the size-(k-1) palette before being returned.

    Cyclic palettes gain the residue class k/2 rounded down once a slot is
    opened by shifting the upper residues; the new vertex takes the opened
    slot. For even k the opened slot collides with its own negation, so
    negative neighbors of ``u`` sitting on the colliding residue move into
    the slot as well. Symmetric palettes alternate between gaining color 0
    (even k, nothing else moves) and losing it (odd k): the zero-colored
    vertices form an independent set, so they migrate to the new extreme
    values, sign picked per edge at ``u``.
    """
    _check_model(model)
    if k < 3:
        raise ValueError("extension needs k >= 3")
    n = sg.graph.vertex_count
    if not 0 <= u < n:
        raise ValueError(f"vertex {u} outside 0..{n - 1}")
    deleted, old_to_new = delete_vertex(sg, u)
    values = tuple(phi)
    if not validate_coloring(deleted, Palette(model, k - 2), values):
        raise ValueError("phi is not a valid (k-2)-coloring of the graph minus u")

    out = [0] * n
    if model == CYCLIC:
        gap = (k - 1) // 2 if k % 2 else k // 2
        for old in range(n):
            if old == u:
                continue
            x = values[old_to_new[old]]
            out[old] = x + 1 if x >= gap else x
        out[u] = gap
        if k % 2 == 0:
            # the opened residue negates to (k-2)/2 in Z_{k-1}; negative
            # neighbors of u on that residue must move into the slot too
            clash = (k - 2) // 2
            for e in sg.graph.adjacency[u]:
                if sg.signature.signs[e] < 0:
                    a, b = sg.graph.edges[e]
                    w = b if a == u else a
                    if out[w] == clash:
                        out[w] = gap
    else:
        if k % 2 == 0:
            # target palette has odd size: color 0 appears, u takes it
            out[u] = 0
            for old in range(n):
                if old != u:
                    out[old] = values[old_to_new[old]]
        else:
            # target palette has even size: color 0 disappears; vertices on 0
            # are pairwise non-adjacent and move to the new extremes
            top = (k - 1) // 2
            out[u] = top
            sign_at_u = {}
            for e in sg.graph.adjacency[u]:
                a, b = sg.graph.edges[e]
                w = b if a == u else a
                sign_at_u[w] = sg.signature.signs[e]
            for old in range(n):
                if old == u:
                    continue
                x = values[old_to_new[old]]
                if x == 0:
                    out[old] = top if sign_at_u.get(old) == -1 else -top
                else:
                    out[old] = x

    result = tuple(out)
    if not validate_coloring(sg, Palette(model, k - 1), result):
        raise TheoremViolationError(
            f"extension produced an invalid coloring {result!r} "
            f"({model}, k={k}, u={u}); this is a bug"
        )
    return result


def lift_signature(
    graph: Graph,
    h_vertices: Iterable[int],
    sigma_h: Signature,
    phi: Sequence[int],
    k: int,
    model: str,
) -> Signature:
    """Extend a signature from an induced subgraph, preserving its chromatic number.

    ``h_vertices`` induces the subgraph H; ``sigma_h`` signs H's edges in
    induced order and ``phi`` (indexed by H's compacted vertices) must be a
    valid k-coloring witnessing ``chromatic_number == k`` exactly. Edges
    inside H keep their sign, edges outside H become negative, and an edge
    from H to the outside becomes negative exactly when its H endpoint has
    color 1. Coloring every outside vertex 1 then extends ``phi``, and H is
    still induced, so the lifted graph has chromatic number exactly k.
    Needs color 1 distinct from its negation: ``k >= 3`` cyclic, ``k >= 2``
    symmetric.
    """
    _check_model(model)
    minimum = 3 if model == CYCLIC else 2
    if k < minimum:
        raise ValueError(f"lifting in the {model} model needs k >= {minimum}")
    kept = sorted(set(h_vertices))
    if not kept:
        raise ValueError("the induced subgraph needs at least one vertex")
    n = graph.vertex_count
    for v in kept:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} outside 0..{n - 1}")
    mapping = {old: new for new, old in enumerate(kept)}
    inside: list[int] = []
    h_edges: list[tuple[int, int]] = []
    for i, (a, b) in enumerate(graph.edges):
        if a in mapping and b in mapping:
            inside.append(i)
            h_edges.append((mapping[a], mapping[b]))
    if len(sigma_h) != len(inside):
        raise ValueError(
            f"sigma_h has {len(sigma_h)} signs for {len(inside)} induced edges"
        )
    h = SignedGraph(Graph(len(kept), tuple(h_edges)), sigma_h)
    values = tuple(phi)
    if not validate_coloring(h, Palette(model, k), values):
        raise ValueError("phi is not a valid k-coloring of the induced subgraph")
    if chromatic_number(h, model) != k:
        raise ValueError("the induced subgraph does not have chromatic number k")

    inside_sign = {orig: sigma_h.signs[pos] for pos, orig in enumerate(inside)}
    signs: list[int] = []
    for i, (a, b) in enumerate(graph.edges):
        a_in, b_in = a in mapping, b in mapping
        if a_in and b_in:
            signs.append(inside_sign[i])
        elif not a_in and not b_in:
            signs.append(-1)
        else:
            anchor = a if a_in else b
            signs.append(-1 if values[mapping[anchor]] == 1 else 1)
    return Signature(tuple(signs))
