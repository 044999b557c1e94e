"""Why chromatic spectra have no gaps, replayed as a construction.

Start from a signature attaining k, extract a k-critical core, delete one
of its vertices (the value drops to exactly k-1), color what is left, and
lift that coloring back to a signature of the whole graph that attains
k-1. Iterating walks the spectrum down to its minimum one step at a time.
"""

from sgspec import (
    CYCLIC,
    Graph,
    Palette,
    SignedGraph,
    chromatic_number,
    extract_critical_subgraph,
    find_coloring,
    induced_subgraph,
    lift_signature,
    sign_string,
)

graph = Graph.complete(5)
sg = SignedGraph.all_positive(graph)
model = CYCLIC
k = chromatic_number(sg, model)
print(f"K5, all positive, {model}: chromatic number {k}")

while k > 3:
    core = extract_critical_subgraph(sg, k, model)
    dropped, rest = core[0], core[1:]
    sub, _ = induced_subgraph(sg, rest)
    down = chromatic_number(sub, model)
    print(f"\n  {k}-critical core {core}; after deleting {dropped} the value is {down}")

    phi = find_coloring(sub, Palette(model, k - 1))
    print(f"  coloring of the remnant with Z_{k - 1}: {phi}")

    lifted = lift_signature(graph, rest, sub.signature, phi, k - 1, model)
    sg = SignedGraph(graph, lifted)
    k = chromatic_number(sg, model)
    print(f"  lifted signature {sign_string(lifted)} attains {k}")

print(f"\nstopped at {k}: complete graphs never go lower in the cyclic model")
