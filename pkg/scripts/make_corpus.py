"""Regenerate the committed graph6 corpora under data/.

Uses the networkx graph atlas (every graph on at most 7 vertices) filtered
to connected graphs with at least one vertex, keeping atlas order. Run from
the repository root:

    python scripts/make_corpus.py
"""

from __future__ import annotations

from pathlib import Path

import networkx as nx
from networkx.generators.atlas import graph_atlas_g


def connected_upto(limit: int) -> list[str]:
    lines = []
    for g in graph_atlas_g():
        n = g.number_of_nodes()
        if 1 <= n <= limit and nx.is_connected(g):
            line = nx.to_graph6_bytes(g, header=False).decode("ascii").strip()
            lines.append(line)
    return lines


def main() -> None:
    data = Path(__file__).resolve().parent.parent / "data"
    data.mkdir(exist_ok=True)
    for limit in (6, 7):
        lines = connected_upto(limit)
        path = data / f"connected_le{limit}.g6"
        path.write_text("\n".join(lines) + "\n", encoding="ascii")
        print(f"{path}: {len(lines)} graphs")


if __name__ == "__main__":
    main()
