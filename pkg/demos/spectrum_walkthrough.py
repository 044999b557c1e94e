"""Walk every switching class of one graph and collect the spectrum.

Pass a graph6 string to inspect your own graph, default is the wheel W5.
Try: python demos/spectrum_walkthrough.py 'D~{'
"""

import sys

from sgspec import (
    MODELS,
    SignedGraph,
    chromatic_number,
    chromatic_spectrum,
    min_chromatic_shortcut,
    parse_graph6,
    sign_string,
    signature_class_representatives,
)

# wheel on 5 vertices: a 4-cycle plus a hub
wheel = parse_graph6("D|s")
graph = parse_graph6(sys.argv[1]) if len(sys.argv) > 1 else wheel

n, m = graph.vertex_count, graph.edge_count
reps = signature_class_representatives(graph)
print(f"graph: {n} vertices, {m} edges, {len(reps)} switching classes")
print()

for model in MODELS:
    print(f"[{model}]")
    for signature in reps:
        k = chromatic_number(SignedGraph(graph, signature), model)
        print(f"  {sign_string(signature)}  ->  {k}")
    report = chromatic_spectrum(graph, model)
    print(f"  spectrum {sorted(report.spectrum)}", end="")
    print(f", interval [{report.m}, {report.M}]", end="")
    print(f", gap-free: {report.interval_ok}")
    shortcut = min_chromatic_shortcut(graph, model)
    print(f"  closed-form minimum {shortcut} matches enumerated {report.m}")
    print()
