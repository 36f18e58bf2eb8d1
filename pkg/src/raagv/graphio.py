"""Graph serialization: edge-list text, graph6, and DOT output.

The edge-list dialect is line based: ``#`` starts a comment, the first
significant line is ``n <count>``, and every following line is
``e <u> <v>``.  Endpoint labels may be arbitrary whitespace-free tokens;
when every label is an integer in range it is used as the vertex index
directly, otherwise labels get indices in order of first appearance.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, new_graph
from .partition import CommutingPartition


class ParseError(ValueError):
    """Malformed input; the message carries the offending line number."""


@dataclass(frozen=True)
class LabelMap:
    """Vertex index -> external label.  Labels are unique, nonempty and free
    of whitespace; the default map labels vertex v with str(v)."""

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        for s in self.labels:
            if not s or any(ch.isspace() for ch in s):
                raise ValueError(f"label {s!r} is empty or contains whitespace")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("labels must be unique")

    @staticmethod
    def default(n: int) -> LabelMap:
        return LabelMap(tuple(str(v) for v in range(n)))

    def label(self, v: int) -> str:
        return self.labels[v]

    def is_default(self) -> bool:
        return all(s == str(i) for i, s in enumerate(self.labels))


def parse_edge_list(text: str) -> tuple[Graph, LabelMap]:
    """Parse the edge-list dialect; see the module docstring for the rules."""
    n: int | None = None
    raw_edges: list[tuple[str, str, int]] = []  # (label u, label v, line number)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if tokens[0] != "n":
                raise ParseError(f"line {lineno}: expected header 'n <count>', got {raw.strip()!r}")
            if len(tokens) != 2:
                raise ParseError(f"line {lineno}: header must be exactly 'n <count>'")
            try:
                n = int(tokens[1])
            except ValueError:
                raise ParseError(f"line {lineno}: vertex count {tokens[1]!r} is not an integer") from None
            if n < 0:
                raise ParseError(f"line {lineno}: vertex count must be nonnegative")
            continue
        if tokens[0] == "n":
            raise ParseError(f"line {lineno}: duplicate 'n' header")
        if tokens[0] != "e":
            raise ParseError(f"line {lineno}: unknown directive {tokens[0]!r}")
        if len(tokens) != 3:
            raise ParseError(f"line {lineno}: edge line must be exactly 'e <u> <v>'")
        raw_edges.append((tokens[1], tokens[2], lineno))
    if n is None:
        raise ParseError("line 1: missing 'n <count>' header")

    labels = _resolve_labels(n, raw_edges)
    index = {lab: i for i, lab in enumerate(labels.labels)}
    edges = []
    for lu, lv, lineno in raw_edges:
        u, v = index[lu], index[lv]
        if u == v:
            raise ParseError(f"line {lineno}: loop edge on {lu!r}")
        edges.append((u, v))
    return new_graph(n, edges), labels


def _resolve_labels(n: int, raw_edges: list[tuple[str, str, int]]) -> LabelMap:
    tokens = [t for lu, lv, _ in raw_edges for t in (lu, lv)]
    numeric = True
    for t in tokens:
        try:
            v = int(t)
        except ValueError:
            numeric = False
            break
        if not 0 <= v < n:
            numeric = False
            break
    if numeric:
        return LabelMap.default(n)

    assigned: dict[str, int] = {}
    for lu, lv, lineno in raw_edges:
        for t in (lu, lv):
            if t not in assigned:
                if len(assigned) == n:
                    raise ParseError(
                        f"line {lineno}: label {t!r} is the {n + 1}-th distinct "
                        f"label but the graph has only {n} vertices"
                    )
                assigned[t] = len(assigned)
    labels = [""] * n
    for lab, i in assigned.items():
        labels[i] = lab
    used = set(assigned)
    for i in range(n):
        if not labels[i]:
            candidate = str(i)
            while candidate in used:
                candidate = "_" + candidate
            labels[i] = candidate
            used.add(candidate)
    return LabelMap(tuple(labels))


def emit_edge_list(g: Graph, labels: LabelMap | None = None) -> str:
    """Serialize to the edge-list dialect; parse_edge_list inverts this."""
    if labels is None:
        labels = LabelMap.default(g.n)
    if len(labels.labels) != g.n:
        raise ValueError("label map size does not match the graph")
    lines = [f"n {g.n}"]
    lines.extend(f"e {labels.label(u)} {labels.label(v)}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


_G6_MAX_N = 62


def emit_graph6(g: Graph) -> str:
    """graph6 encoding, single-byte size form only (n <= 62).

    Bits run over the upper triangle column by column, (0,1), (0,2), (1,2),
    (0,3) and so on, packed big-endian into 6-bit groups offset by 63.
    """
    if g.n > _G6_MAX_N:
        raise ValueError(f"graph6 support stops at n = {_G6_MAX_N}, got {g.n}")
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(g.has_edge(u, v))
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        group = bits[i : i + 6]
        group += [False] * (6 - len(group))
        val = 0
        for b in group:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(data: str | bytes) -> Graph:
    """Decode a graph6 string; strict inverse of :func:`emit_graph6`."""
    if isinstance(data, bytes):
        try:
            data = data.decode("ascii")
        except UnicodeDecodeError:
            raise ParseError("graph6 input is not ASCII") from None
    if not data:
        raise ParseError("empty graph6 input")
    codes = [ord(ch) for ch in data]
    for ch in codes:
        if not 63 <= ch <= 126:
            raise ParseError(f"graph6 byte {ch} outside the printable range 63..126")
    n = codes[0] - 63
    if n > _G6_MAX_N:
        raise ParseError("multi-byte graph6 size forms are not supported")
    npairs = n * (n - 1) // 2
    expected = (npairs + 5) // 6
    if len(codes) - 1 != expected:
        raise ParseError(
            f"graph6 body has {len(codes) - 1} bytes where {expected} are required for n = {n}"
        )
    bits = []
    for ch in codes[1:]:
        val = ch - 63
        bits.extend(val >> k & 1 for k in (5, 4, 3, 2, 1, 0))
    if any(bits[npairs:]):
        raise ParseError("graph6 padding bits must be zero")
    adj = [0] * n
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            i += 1
    return Graph(n, tuple(adj))


def emit_dot(
    g: Graph,
    partition: CommutingPartition | None = None,
    labels: LabelMap | None = None,
) -> str:
    """DOT text for the graph; blocks render as clusters when a partition is
    given, with p0 visually distinguished from the parts."""
    if labels is None:
        labels = LabelMap.default(g.n)
    out = ["graph G {"]

    def node_line(v: int) -> str:
        return f'  {v} [label="{labels.label(v)}"];'

    if partition is None:
        for v in range(g.n):
            out.append(node_line(v))
    else:
        if partition.p0:
            out.append("  subgraph cluster_p0 {")
            out.append('    label="P0";')
            out.append("    style=filled;")
            out.append("    color=lightgrey;")
            for v in sorted(partition.p0):
                out.append("  " + node_line(v))
            out.append("  }")
        for k, part in enumerate(partition.parts, start=1):
            out.append(f"  subgraph cluster_p{k} {{")
            out.append(f'    label="P{k}";')
            out.append("    color=black;")
            for v in sorted(part):
                out.append("  " + node_line(v))
            out.append("  }")
    for u, v in g.edges():
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"
