"""File formats: graph6 input, signed edge lists, and report emission.

graph6 packs the upper triangle of the adjacency matrix, column by column,
into 6-bit chunks offset by 63 into printable ASCII; an optional
``>>graph6<<`` prefix is tolerated. The signed edge list is a small text
format: a header line ``n <vertex count>`` followed by one ``u v s`` line
per edge with ``s`` either ``+`` or ``-``. Emission is deterministic:
equal inputs produce byte-identical output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import Graph, Signature, SignedGraph
from .critical import CriticalityCertificate
from .spectrum import SpectrumReport


class FormatError(ValueError):
    """Malformed input text (graph6, edge list, or corpus)."""


GRAPH6_HEADER = ">>graph6<<"


def sign_string(signature: Signature) -> str:
    """Signature as one character per edge index, ``+`` or ``-``."""
    return "".join("+" if s > 0 else "-" for s in signature.signs)


def parse_sign_string(text: str) -> Signature:
    """Inverse of :func:`sign_string`."""
    signs = []
    for ch in text:
        if ch == "+":
            signs.append(1)
        elif ch == "-":
            signs.append(-1)
        else:
            raise FormatError(f"sign string may contain only '+' and '-', got {ch!r}")
    return Signature(tuple(signs))


def _graph6_units(text: str) -> list[int]:
    units = []
    for ch in text:
        code = ord(ch)
        if not 63 <= code <= 126:
            raise FormatError(f"character {ch!r} is not valid graph6 data")
        units.append(code - 63)
    return units


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (all three vertex-count header forms)."""
    body = line.strip()
    if body.startswith(GRAPH6_HEADER):
        body = body[len(GRAPH6_HEADER):]
    if not body:
        raise FormatError("empty graph6 line")
    units = _graph6_units(body)
    if units[0] < 63:
        n = units[0]
        at = 1
    elif len(units) >= 2 and units[1] < 63:
        if len(units) < 4:
            raise FormatError("truncated graph6 vertex-count header")
        n = (units[1] << 12) | (units[2] << 6) | units[3]
        at = 4
    else:
        if len(units) < 8:
            raise FormatError("truncated graph6 vertex-count header")
        n = 0
        for unit in units[2:8]:
            n = (n << 6) | unit
        at = 8
    bit_count = n * (n - 1) // 2
    needed = (bit_count + 5) // 6
    if len(units) - at != needed:
        raise FormatError(
            f"graph6 adjacency section has {len(units) - at} characters, "
            f"expected {needed} for {n} vertices"
        )
    edges = []
    bit = 0
    for v in range(1, n):
        for u in range(v):
            unit = units[at + bit // 6]
            if (unit >> (5 - bit % 6)) & 1:
                edges.append((u, v))
            bit += 1
    while bit < needed * 6:
        if (units[at + bit // 6] >> (5 - bit % 6)) & 1:
            raise FormatError("graph6 padding bits must be zero")
        bit += 1
    return Graph(n, tuple(edges))


def emit_graph6(graph: Graph) -> str:
    """Encode a graph as one graph6 line (no prefix)."""
    n = graph.vertex_count
    if n <= 62:
        head = [n]
    elif n <= 258047:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        head = [63, 63] + [(n >> shift) & 63 for shift in range(30, -1, -6)]
    bit_count = n * (n - 1) // 2
    bits = [0] * ((bit_count + 5) // 6 * 6)
    position = {}
    bit = 0
    for v in range(1, n):
        for u in range(v):
            position[(u, v)] = bit
            bit += 1
    for u, v in graph.edges:
        bits[position[(u, v)]] = 1
    units = head[:]
    for i in range(0, len(bits), 6):
        value = 0
        for b in bits[i:i + 6]:
            value = (value << 1) | b
        units.append(value)
    return "".join(chr(63 + u) for u in units)


def parse_signed_edgelist(text: str) -> SignedGraph:
    """Parse the ``n <count>`` / ``u v s`` edge-list format.

    Blank lines and lines starting with ``#`` are skipped. Loops, repeated
    edges, out-of-range endpoints and unknown sign tokens are rejected.
    """
    lines = [
        (number, stripped)
        for number, raw in enumerate(text.splitlines(), start=1)
        if (stripped := raw.strip()) and not stripped.startswith("#")
    ]
    if not lines:
        raise FormatError("empty signed edge list")
    header_no, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
        raise FormatError(f"line {header_no}: expected header 'n <count>', got {header!r}")
    n = int(parts[1])
    edges: list[tuple[int, int]] = []
    signs: list[int] = []
    seen: set[tuple[int, int]] = set()
    for number, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 3:
            raise FormatError(f"line {number}: expected 'u v s', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise FormatError(f"line {number}: endpoints must be integers") from None
        if tokens[2] == "+":
            sign = 1
        elif tokens[2] == "-":
            sign = -1
        else:
            raise FormatError(f"line {number}: sign must be '+' or '-', got {tokens[2]!r}")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {number}: endpoint outside 0..{n - 1}")
        if u == v:
            raise FormatError(f"line {number}: loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"line {number}: repeated edge {key}")
        seen.add(key)
        edges.append(key)
        signs.append(sign)
    return SignedGraph(Graph(n, tuple(edges)), Signature(tuple(signs)))


def emit_signed_edgelist(sg: SignedGraph) -> str:
    """Render a signed graph in the edge-list format; round-trips exactly."""
    out = [f"n {sg.graph.vertex_count}"]
    for i, (u, v) in enumerate(sg.graph.edges):
        out.append(f"{u} {v} {'+' if sg.signature.signs[i] > 0 else '-'}")
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class CorpusEntry:
    """One input graph: an identifier, the graph, and signs when given.

    graph6 corpora carry no signs, so ``signature`` is None there and
    commands that need one signed graph treat the entry as all-positive.
    """

    id: str
    graph: Graph
    signature: Signature | None = None

    def signed(self) -> SignedGraph:
        if self.signature is not None:
            return SignedGraph(self.graph, self.signature)
        return SignedGraph.all_positive(self.graph)


def load_corpus(text: str, *, name: str = "input") -> list[CorpusEntry]:
    """Load either a graph6 corpus (one graph per line) or one signed edge list.

    The format is detected from the first meaningful line: an ``n <count>``
    header means a single signed edge-list entry named ``name``; anything
    else is read as graph6 lines with 1-based line numbers as identifiers.
    """
    meaningful = [
        raw.strip() for raw in text.splitlines()
        if raw.strip() and not raw.strip().startswith("#")
    ]
    if meaningful and meaningful[0].split()[:1] == ["n"]:
        return [CorpusEntry(id=name, graph=(sg := parse_signed_edgelist(text)).graph,
                            signature=sg.signature)]
    entries = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            entries.append(CorpusEntry(id=str(number), graph=parse_graph6(line)))
        except FormatError as exc:
            raise FormatError(f"line {number}: {exc}") from None
    if not entries:
        raise FormatError("no graphs in input")
    return entries


def _csv_escape(cell: str) -> str:
    if any(ch in cell for ch in ',"\n'):
        return '"' + cell.replace('"', '""') + '"'
    return cell


def _bool(value: bool) -> str:
    return "true" if value else "false"


SPECTRUM_CSV_HEADER = "id,model,m,M,spectrum,interval_ok"
CERTIFICATE_CSV_HEADER = "id,model,k,critical,per_vertex"


def emit_report(
    report: SpectrumReport | CriticalityCertificate,
    format: str = "json",
    *,
    entry_id: str = "",
    header: bool = True,
) -> str:
    """Render one report as a single line, byte-stable across runs.

    JSON records are compact with a fixed key order. CSV output uses the
    fixed header ``id,model,m,M,spectrum,interval_ok`` for spectrum reports
    and ``id,model,k,critical,per_vertex`` for certificates; pass
    ``header=False`` to emit the data row alone when concatenating. Cells
    holding several values join them with ``;``.
    """
    if format not in ("json", "csv"):
        raise ValueError(f"format must be 'json' or 'csv', got {format!r}")
    if isinstance(report, SpectrumReport):
        if format == "json":
            record = {
                "id": entry_id,
                "model": report.model,
                "vertices": report.graph.vertex_count,
                "edges": report.graph.edge_count,
                "classes": [[sign_string(s), value] for s, value in report.classes],
                "m": report.m,
                "M": report.M,
                "spectrum": list(report.spectrum),
                "interval_ok": report.interval_ok,
            }
            return json.dumps(record, separators=(",", ":")) + "\n"
        row = ",".join([
            _csv_escape(entry_id),
            report.model,
            str(report.m),
            str(report.M),
            ";".join(str(v) for v in report.spectrum),
            _bool(report.interval_ok),
        ])
        return (SPECTRUM_CSV_HEADER + "\n" + row + "\n") if header else row + "\n"
    if isinstance(report, CriticalityCertificate):
        if format == "json":
            record = {
                "id": entry_id,
                "model": report.model,
                "k": report.k,
                "critical": report.critical,
                "per_vertex": list(report.per_vertex),
            }
            return json.dumps(record, separators=(",", ":")) + "\n"
        row = ",".join([
            _csv_escape(entry_id),
            report.model,
            str(report.k),
            _bool(report.critical),
            ";".join(str(v) for v in report.per_vertex),
        ])
        return (CERTIFICATE_CSV_HEADER + "\n" + row + "\n") if header else row + "\n"
    raise TypeError(f"cannot emit {type(report).__name__}")
