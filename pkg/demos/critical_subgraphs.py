"""Peel a graph down to its critical cores.

For each target value i up to the chromatic number, greedily delete
vertices while the chromatic number stays at least i. What remains is an
induced i-critical subgraph: deleting any further vertex drops the value.
"""

from sgspec import (
    CYCLIC,
    Graph,
    SignedGraph,
    chromatic_number,
    classify_small_critical,
    extract_critical_subgraph,
    induced_subgraph,
    is_critical,
)

# K5 plus a pendant path, all positive
graph = Graph(
    7,
    (
        (0, 1), (0, 2), (0, 3), (0, 4),
        (1, 2), (1, 3), (1, 4),
        (2, 3), (2, 4), (3, 4),
        (4, 5), (5, 6),
    ),
)
sg = SignedGraph.all_positive(graph)
k = chromatic_number(sg, CYCLIC)
print(f"K5 with a tail: {graph.vertex_count} vertices, cyclic chromatic number {k}")
print()

for i in range(1, k + 1):
    vertices = extract_critical_subgraph(sg, i, CYCLIC)
    sub, _ = induced_subgraph(sg, vertices)
    critical, certificate = is_critical(sub, CYCLIC)
    assert critical and certificate.k == i
    line = f"i={i}: kept {vertices}, per-vertex deletion values {certificate.per_vertex}"
    if i <= 3:
        line += f", shape: {classify_small_critical(sub, CYCLIC)}"
    print(line)

print()
print("the tail never survives: criticality forces minimum degree >= k - 1")
