"""Coloring models for signed graphs and exact chromatic numbers.

Two palettes are supported. The cyclic model colors with residues modulo k;
the symmetric model colors with the n smallest integers by absolute value,
so n = 2k+1 gives {0, +-1, ..., +-k} and n = 2k gives {+-1, ..., +-k}. In
both models an edge uv with sign s forbids c(u) = s * c(v), negation taken
in the respective group.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Sequence

from .core import SignedGraph, TheoremViolationError

CYCLIC = "cyclic"
SYMMETRIC = "symmetric"
MODELS = (CYCLIC, SYMMETRIC)

Coloring = tuple[int, ...]


def _check_model(model: str) -> None:
    if model not in MODELS:
        raise ValueError(f"model must be one of {MODELS}, got {model!r}")


@dataclass(frozen=True)
class Palette:
    """A color set of a given size under one of the two models.

    Cyclic palettes of size k are the residues 0..k-1 with negation modulo k.
    Symmetric palettes of size n are integers symmetric around zero: size
    2k+1 is {0, +-1, ..., +-k}, size 2k is {+-1, ..., +-k} (zero drops out
    first since it is the only self-negative color). Iteration order is
    fixed: residues ascending, or 0 (when present) then +1, -1, +2, -2, ...
    """

    model: str
    size: int

    def __post_init__(self) -> None:
        _check_model(self.model)
        if self.size < 1:
            raise ValueError("palette size must be at least 1")

    @cached_property
    def colors(self) -> tuple[int, ...]:
        if self.model == CYCLIC:
            return tuple(range(self.size))
        half, odd = divmod(self.size, 2)
        out: list[int] = [0] if odd else []
        for i in range(1, half + 1):
            out.append(i)
            out.append(-i)
        return tuple(out)

    @cached_property
    def _color_set(self) -> frozenset[int]:
        return frozenset(self.colors)

    def __contains__(self, color: int) -> bool:
        return color in self._color_set

    def negate(self, color: int) -> int:
        """The color forbidden across a negative edge from ``color``."""
        if self.model == CYCLIC:
            return (-color) % self.size
        return -color


def validate_coloring(sg: SignedGraph, palette: Palette, coloring: Sequence[int]) -> bool:
    """True iff ``coloring`` satisfies every edge constraint.

    Raises ``ValueError`` when the assignment is malformed (wrong length or
    a color outside the palette); returns False only for genuine conflicts.
    """
    values = tuple(coloring)
    n = sg.graph.vertex_count
    if len(values) != n:
        raise ValueError(f"coloring has {len(values)} entries for {n} vertices")
    for c in values:
        if c not in palette:
            raise ValueError(f"color {c!r} is not in the palette")
    signs = sg.signature.signs
    for i, (u, v) in enumerate(sg.graph.edges):
        forbidden = values[v] if signs[i] > 0 else palette.negate(values[v])
        if values[u] == forbidden:
            return False
    return True


def find_coloring(sg: SignedGraph, palette: Palette) -> Coloring | None:
    """First valid coloring in deterministic search order, or None.

    Vertices are tried by descending degree (ties by index), colors in
    palette order, with forward checking on the remaining domains. The
    result only depends on the input, never on timing.
    """
    graph = sg.graph
    n = graph.vertex_count
    if n == 0:
        return ()
    colors = palette.colors
    width = len(colors)
    order = sorted(range(n), key=lambda v: (-graph.degree(v), v))
    position = [0] * n
    for i, v in enumerate(order):
        position[v] = i
    # constraints grouped on the earlier endpoint, pointing at the later one
    forward: list[list[tuple[int, bool]]] = [[] for _ in range(n)]
    for e, (u, v) in enumerate(graph.edges):
        i, j = position[u], position[v]
        if i > j:
            i, j = j, i
        forward[i].append((j, sg.signature.signs[e] < 0))
    index_of = {c: i for i, c in enumerate(colors)}
    negated = [index_of[palette.negate(c)] for c in colors]
    domains = [(1 << width) - 1] * n
    chosen = [0] * n

    def search(i: int) -> bool:
        if i == n:
            return True
        available = domains[i]
        constraints = forward[i]
        while available:
            bit = available & -available
            available ^= bit
            ci = bit.bit_length() - 1
            chosen[i] = ci
            undo: list[tuple[int, int]] = []
            dead = False
            for j, neg in constraints:
                conflict = 1 << (negated[ci] if neg else ci)
                gone = domains[j]
                if gone & conflict:
                    domains[j] = gone ^ conflict
                    undo.append((j, conflict))
                    if gone == conflict:
                        dead = True
                        break
            if not dead and search(i + 1):
                return True
            for j, conflict in undo:
                domains[j] |= conflict
        return False

    if not search(0):
        return None
    out = [0] * n
    for i, v in enumerate(order):
        out[v] = colors[chosen[i]]
    return tuple(out)


def _greedy_proper_count(graph) -> int:
    # colors used by the index-order greedy proper coloring of the underlying
    # graph; any proper t-coloring embeds into both models, giving the search
    # a guaranteed stopping point
    color = [-1] * graph.vertex_count
    used_max = 0
    for v in range(graph.vertex_count):
        taken = {color[w] for w in graph.neighbors(v) if color[w] >= 0}
        c = 0
        while c in taken:
            c += 1
        color[v] = c
        if c + 1 > used_max:
            used_max = c + 1
    return used_max or 1


def chromatic_number(sg: SignedGraph, model: str) -> int:
    """Least palette size admitting a valid coloring; 0 for the empty graph.

    Palette sizes are searched in increasing order. A greedy proper coloring
    of the underlying graph with t colors caps the search at 2t+1 (cyclic)
    or 2t (symmetric): spreading t proper colors to values 0..t-1 or
    +1..+t makes every constraint a plain inequality, which the proper
    coloring satisfies.
    """
    _check_model(model)
    if sg.graph.vertex_count == 0:
        return 0
    t = _greedy_proper_count(sg.graph)
    bound = 2 * t + 1 if model == CYCLIC else 2 * t
    for k in range(1, bound + 1):
        if find_coloring(sg, Palette(model, k)) is not None:
            return k
    raise TheoremViolationError(
        f"no {model} coloring up to the guaranteed bound {bound}; solver bug"
    )


def oracle_chromatic_number(sg: SignedGraph, model: str, *, max_vertices: int = 8) -> int:
    """Chromatic number by exhaustive enumeration of all assignments.

    Deliberately shares nothing with the backtracking solver: the palette
    is rebuilt inline and every assignment in the full product is checked.
    Exponential, so inputs are capped at ``max_vertices`` (default 8).
    """
    _check_model(model)
    n = sg.graph.vertex_count
    if n > max_vertices:
        raise ValueError(f"oracle is limited to {max_vertices} vertices, got {n}")
    if n == 0:
        return 0
    edges = [(u, v, sg.signature.signs[i] < 0) for i, (u, v) in enumerate(sg.graph.edges)]
    t = _greedy_proper_count(sg.graph)
    bound = 2 * t + 1 if model == CYCLIC else 2 * t
    for k in range(1, bound + 1):
        if model == CYCLIC:
            colors = list(range(k))
        else:
            half, odd = divmod(k, 2)
            colors = ([0] if odd else []) + [s * i for i in range(1, half + 1) for s in (1, -1)]
        for assignment in product(colors, repeat=n):
            ok = True
            for u, v, neg in edges:
                b = assignment[v]
                if neg:
                    b = (-b) % k if model == CYCLIC else -b
                if assignment[u] == b:
                    ok = False
                    break
            if ok:
                return k
    raise TheoremViolationError(
        f"no {model} coloring up to the guaranteed bound {bound}; oracle bug"
    )
