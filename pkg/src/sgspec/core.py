"""Signed graphs: representation, switching, balance, and switching equivalence.

A signed graph is a simple undirected graph together with a sign (+1 or -1)
on every edge. Switching at a vertex set negates every edge with exactly one
endpoint inside the set; signatures related by switching behave identically
for every notion studied here, so most questions are really questions about
switching classes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Literal

POSITIVE = 1
NEGATIVE = -1


class TheoremViolationError(RuntimeError):
    """A computed result contradicts a structural guarantee.

    Raised when an internal cross-check fails: a chromatic spectrum that is
    not an interval, a vertex-deletion value outside {k, k-1}, a critical
    graph of a shape that cannot exist. Seeing this exception means there is
    a bug somewhere, not that the input is unusual.
    """


@dataclass(frozen=True)
class Graph:
    """Simple finite undirected graph with indexed edges.

    Vertices are ``0 .. vertex_count - 1``. Edges are ``(u, v)`` pairs with
    ``u < v``; the position of a pair in ``edges`` is the edge's index, which
    signatures refer to. Loops and parallel edges are rejected.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        n = self.vertex_count
        if n < 0:
            raise ValueError("vertex_count must be non-negative")
        seen: set[tuple[int, int]] = set()
        normalized: list[tuple[int, int]] = []
        for pair in self.edges:
            u, v = pair
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {pair!r} has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            normalized.append((u, v))
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex tuple of incident edge indices, in edge-index order."""
        incident: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for i, (u, v) in enumerate(self.edges):
            incident[u].append(i)
            incident[v].append(i)
        return tuple(tuple(ix) for ix in incident)

    @cached_property
    def _neighbor_pairs(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        # (neighbor, edge index) pairs sorted by neighbor, per vertex
        pairs: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for i, (u, v) in enumerate(self.edges):
            pairs[u].append((v, i))
            pairs[v].append((u, i))
        return tuple(tuple(sorted(p)) for p in pairs)

    @cached_property
    def _edge_lookup(self) -> dict[tuple[int, int], int]:
        return {pair: i for i, pair in enumerate(self.edges)}

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of ``v`` in ascending order."""
        return tuple(w for w, _ in self._neighbor_pairs[v])

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._edge_lookup

    def edge_index(self, u: int, v: int) -> int:
        """Index of the edge ``uv``; raises ``ValueError`` if absent."""
        if u > v:
            u, v = v, u
        try:
            return self._edge_lookup[(u, v)]
        except KeyError:
            raise ValueError(f"no edge between {u} and {v}") from None

    @cached_property
    def _forest(self) -> tuple[tuple[int, ...], tuple[tuple[int, int, int], ...]]:
        """Deterministic BFS forest: (roots, steps).

        Each component is rooted at its smallest vertex; within a component
        neighbors are visited in ascending order. Steps are (child, parent,
        edge index) triples in visit order.
        """
        n = self.vertex_count
        seen = [False] * n
        roots: list[int] = []
        steps: list[tuple[int, int, int]] = []
        for root in range(n):
            if seen[root]:
                continue
            roots.append(root)
            seen[root] = True
            queue = deque([root])
            while queue:
                v = queue.popleft()
                for w, e in self._neighbor_pairs[v]:
                    if not seen[w]:
                        seen[w] = True
                        steps.append((w, v, e))
                        queue.append(w)
        return tuple(roots), tuple(steps)

    @property
    def component_count(self) -> int:
        return len(self._forest[0])

    @property
    def is_connected(self) -> bool:
        return self.component_count <= 1

    @classmethod
    def edgeless(cls, n: int) -> Graph:
        return cls(n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, tuple((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        """Circuit on ``n >= 3`` vertices; edge i joins i and i+1, the last edge closes up."""
        if n < 3:
            raise ValueError("a circuit needs at least 3 vertices")
        rim = [(i, i + 1) for i in range(n - 1)]
        rim.append((0, n - 1))
        return cls(n, tuple(rim))

    @classmethod
    def star(cls, leaves: int) -> Graph:
        return cls(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


@dataclass(frozen=True)
class Signature:
    """Edge signs as a tuple of +1/-1, aligned with a graph's edge indices."""

    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        normalized = tuple(self.signs)
        for s in normalized:
            if s != 1 and s != -1:
                raise ValueError(f"signs must be +1 or -1, got {s!r}")
        object.__setattr__(self, "signs", normalized)

    def __len__(self) -> int:
        return len(self.signs)

    @property
    def negative_edges(self) -> tuple[int, ...]:
        """Indices of negative edges, ascending."""
        return tuple(i for i, s in enumerate(self.signs) if s < 0)

    def negate(self) -> Signature:
        return Signature(tuple(-s for s in self.signs))

    @classmethod
    def all_positive(cls, edge_count: int) -> Signature:
        return cls((1,) * edge_count)

    @classmethod
    def all_negative(cls, edge_count: int) -> Signature:
        return cls((-1,) * edge_count)

    @classmethod
    def from_negative_edges(cls, edge_count: int, negative: Iterable[int]) -> Signature:
        signs = [1] * edge_count
        for i in negative:
            if not 0 <= i < edge_count:
                raise ValueError(f"edge index {i} outside 0..{edge_count - 1}")
            signs[i] = -1
        return cls(tuple(signs))


@dataclass(frozen=True)
class SignedGraph:
    """A graph together with a signature on its edges."""

    graph: Graph
    signature: Signature

    def __post_init__(self) -> None:
        if len(self.signature) != self.graph.edge_count:
            raise ValueError(
                f"signature has {len(self.signature)} signs "
                f"for {self.graph.edge_count} edges"
            )

    def sign(self, edge_index: int) -> int:
        return self.signature.signs[edge_index]

    @classmethod
    def all_positive(cls, graph: Graph) -> SignedGraph:
        return cls(graph, Signature.all_positive(graph.edge_count))

    @classmethod
    def all_negative(cls, graph: Graph) -> SignedGraph:
        return cls(graph, Signature.all_negative(graph.edge_count))

    @classmethod
    def with_negative_edges(cls, graph: Graph, pairs: Iterable[tuple[int, int]]) -> SignedGraph:
        """All-positive except the edges given as (u, v) pairs."""
        negative = [graph.edge_index(u, v) for u, v in pairs]
        return cls(graph, Signature.from_negative_edges(graph.edge_count, negative))


@dataclass(frozen=True)
class BalanceWitness:
    """Evidence returned by :func:`is_balanced`.

    ``kind == "switching-set"``: switching at ``vertices`` makes every edge
    positive, certifying balance. ``kind == "unbalanced-circuit"``:
    ``vertices`` is a circuit, in traversal order, whose sign is -1.
    """

    kind: Literal["switching-set", "unbalanced-circuit"]
    vertices: tuple[int, ...]


def switch(sg: SignedGraph, vertices: Iterable[int]) -> SignedGraph:
    """Negate every edge with exactly one endpoint in ``vertices``."""
    chosen = set(vertices)
    n = sg.graph.vertex_count
    for v in chosen:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} outside 0..{n - 1}")
    signs = list(sg.signature.signs)
    for i, (u, v) in enumerate(sg.graph.edges):
        if (u in chosen) != (v in chosen):
            signs[i] = -signs[i]
    return SignedGraph(sg.graph, Signature(tuple(signs)))


def circuit_sign(sg: SignedGraph, circuit: Iterable[int]) -> int:
    """Product of edge signs along a circuit given as a vertex sequence.

    The sequence must list at least 3 distinct vertices, consecutive ones
    (cyclically) joined by edges.
    """
    seq = list(circuit)
    if len(seq) < 3:
        raise ValueError("a circuit needs at least 3 vertices")
    if len(set(seq)) != len(seq):
        raise ValueError("circuit repeats a vertex")
    sign = 1
    for a, b in zip(seq, seq[1:] + seq[:1]):
        sign *= sg.signature.signs[sg.graph.edge_index(a, b)]
    return sign


def _tree_marks(sg: SignedGraph) -> list[int]:
    # +-1 per vertex: roots get +1, children get sign(tree edge) * mark(parent).
    # Switching at the -1 vertices makes every forest edge positive.
    marks = [1] * sg.graph.vertex_count
    signs = sg.signature.signs
    for child, parent, e in sg.graph._forest[1]:
        marks[child] = signs[e] * marks[parent]
    return marks


def is_balanced(sg: SignedGraph) -> tuple[bool, BalanceWitness]:
    """Decide balance; every circuit positive iff some switching is all-positive.

    Returns ``(True, switching-set witness)`` or ``(False, circuit witness)``.
    The circuit witness is a fundamental circuit of the BFS forest whose sign
    is -1.
    """
    graph = sg.graph
    signs = sg.signature.signs
    marks = _tree_marks(sg)
    n = graph.vertex_count
    parent = [-1] * n
    depth = [0] * n
    for child, par, _ in graph._forest[1]:
        parent[child] = par
        depth[child] = depth[par] + 1
    for i, (u, v) in enumerate(graph.edges):
        if marks[u] * marks[v] == signs[i]:
            continue
        # splice the two tree paths at their lowest common ancestor
        path_u = [u]
        path_v = [v]
        a, b = u, v
        while depth[a] > depth[b]:
            a = parent[a]
            path_u.append(a)
        while depth[b] > depth[a]:
            b = parent[b]
            path_v.append(b)
        while a != b:
            a = parent[a]
            path_u.append(a)
            b = parent[b]
            path_v.append(b)
        circuit = tuple(path_u + path_v[-2::-1])
        return False, BalanceWitness("unbalanced-circuit", circuit)
    negative_side = tuple(v for v in range(n) if marks[v] < 0)
    return True, BalanceWitness("switching-set", negative_side)


def is_antibalanced(sg: SignedGraph) -> bool:
    """True iff the negation of ``sg`` is balanced."""
    return is_balanced(SignedGraph(sg.graph, sg.signature.negate()))[0]


def are_equivalent(graph: Graph, a: Signature, b: Signature) -> bool:
    """True iff signatures ``a`` and ``b`` of ``graph`` differ by a switching."""
    if len(a) != graph.edge_count or len(b) != graph.edge_count:
        raise ValueError("signature length does not match the graph")
    product = Signature(tuple(x * y for x, y in zip(a.signs, b.signs)))
    return is_balanced(SignedGraph(graph, product))[0]


def canonical_form(sg: SignedGraph) -> tuple[SignedGraph, tuple[int, ...]]:
    """Switch ``sg`` so every BFS-forest edge is positive.

    Equivalent signed graphs map to the identical canonical form, so this is
    a total classifier for switching classes. Returns the canonical signed
    graph and the switching set that produced it.
    """
    marks = _tree_marks(sg)
    chosen = tuple(v for v in range(sg.graph.vertex_count) if marks[v] < 0)
    return switch(sg, chosen), chosen


def spanning_forest(graph: Graph) -> tuple[int, ...]:
    """Edge indices of the deterministic BFS spanning forest, in visit order."""
    return tuple(e for _, _, e in graph._forest[1])


def induced_subgraph(sg: SignedGraph, vertices: Iterable[int]) -> tuple[SignedGraph, dict[int, int]]:
    """Subgraph induced on ``vertices``, compacted to 0..len-1 preserving order.

    Returns the induced signed graph and the old-to-new vertex index map.
    Edges keep their relative order, so induced signatures stay aligned.
    """
    kept = sorted(set(vertices))
    n = sg.graph.vertex_count
    for v in kept:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} outside 0..{n - 1}")
    mapping = {old: new for new, old in enumerate(kept)}
    edges: list[tuple[int, int]] = []
    signs: list[int] = []
    for i, (u, v) in enumerate(sg.graph.edges):
        if u in mapping and v in mapping:
            edges.append((mapping[u], mapping[v]))
            signs.append(sg.signature.signs[i])
    sub = SignedGraph(Graph(len(kept), tuple(edges)), Signature(tuple(signs)))
    return sub, mapping


def delete_vertex(sg: SignedGraph, vertex: int) -> tuple[SignedGraph, dict[int, int]]:
    """Remove one vertex (with its edges); remaining vertices are compacted.

    Returns the smaller signed graph and the old-to-new vertex index map.
    """
    n = sg.graph.vertex_count
    if not 0 <= vertex < n:
        raise ValueError(f"vertex {vertex} outside 0..{n - 1}")
    return induced_subgraph(sg, (v for v in range(n) if v != vertex))
