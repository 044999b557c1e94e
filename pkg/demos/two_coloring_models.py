"""Side by side: cyclic residues versus the symmetric palette.

The same signed graph rarely needs the same number of colors in both
models, but the two values never drift more than one apart.
"""

from sgspec import (
    CYCLIC,
    MODELS,
    SYMMETRIC,
    Graph,
    Palette,
    SignedGraph,
    chromatic_number,
    find_coloring,
    sign_string,
)

print("palette orders, as the solver tries them:")
for size in range(1, 6):
    print(f"  M_{size} =", Palette(SYMMETRIC, size).colors)
print(f"  Z_4 =", Palette(CYCLIC, 4).colors)
print()

cases = [
    ("balanced triangle", SignedGraph.all_positive(Graph.complete(3))),
    ("unbalanced triangle", SignedGraph.with_negative_edges(Graph.complete(3), [(0, 1)])),
    ("balanced C4", SignedGraph.all_positive(Graph.cycle(4))),
    ("unbalanced C4", SignedGraph.with_negative_edges(Graph.cycle(4), [(0, 1)])),
    ("all-negative K4", SignedGraph.all_negative(Graph.complete(4))),
    ("all-positive K5", SignedGraph.all_positive(Graph.complete(5))),
]

print(f"{'graph':22} {'signs':10} {'cyclic':>6} {'symmetric':>9}")
for name, sg in cases:
    chi_c = chromatic_number(sg, CYCLIC)
    chi_s = chromatic_number(sg, SYMMETRIC)
    assert abs(chi_c - chi_s) <= 1
    print(f"{name:22} {sign_string(sg.signature):10} {chi_c:>6} {chi_s:>9}")

print()
sg = SignedGraph.with_negative_edges(Graph.complete(4), [(0, 1), (2, 3)])
for model in MODELS:
    k = chromatic_number(sg, model)
    phi = find_coloring(sg, Palette(model, k))
    print(f"K4 with two disjoint negative edges, {model}: k={k}, coloring {phi}")
