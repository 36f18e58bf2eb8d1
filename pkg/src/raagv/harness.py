"""Exhaustive and randomized verification at desk scale.

``cross_check`` runs the three independent deciders (forbidden-triple scan,
greedy partitioner, complement recognizer) over every labeled graph of a
given order and records disagreements; the counts double as a check against
the expected number of pattern-free graphs, which equals the Bell numbers.
The random generators here feed the property tests and are deterministic in
their seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .classify import find_forbidden_triple, recognize_multipartite
from .graphs import Graph, new_graph
from .partition import CommutingPartition, greedy_partition

MAX_ENUMERATION_N = 8


def graph_from_code(n: int, code: int) -> Graph:
    """Decode a graph from the integer whose bit i is the adjacency of the
    i-th vertex pair in lexicographic order."""
    adj = [0] * n
    for i, (u, v) in enumerate(combinations(range(n), 2)):
        if code >> i & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def graph_code(g: Graph) -> int:
    code = 0
    for i, (u, v) in enumerate(combinations(range(g.n), 2)):
        if g.has_edge(u, v):
            code |= 1 << i
    return code


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labeled graphs on n vertices in code order.

    Capped at n = 8; beyond that exhaustive enumeration stops being a desk
    job and the cap fails fast instead of hanging.
    """
    if not 0 <= n <= MAX_ENUMERATION_N:
        raise ValueError(f"enumeration supports 0 <= n <= {MAX_ENUMERATION_N}, got {n}")
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        adj = [0] * n
        for i, (u, v) in enumerate(pairs):
            if code >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        yield Graph(n, tuple(adj))


@dataclass(frozen=True)
class Mismatch:
    """One graph on which the three deciders disagreed, by enumeration code."""

    code: int
    triple_free: bool
    greedy_ok: bool
    multipartite_ok: bool


@dataclass(frozen=True)
class CrossCheckReport:
    n: int
    total_graphs: int
    nb_count: int
    gp_count: int
    mismatches: tuple[Mismatch, ...]


def cross_check(n: int) -> CrossCheckReport:
    """Run all three deciders over every labeled graph on n vertices."""
    total = nb = gp = 0
    bad: list[Mismatch] = []
    code = 0
    for g in enumerate_graphs(n):
        total += 1
        triple_free = find_forbidden_triple(g) is None
        greedy_ok = isinstance(greedy_partition(g), CommutingPartition)
        multi_ok = recognize_multipartite(g) is not None
        nb += triple_free
        gp += greedy_ok
        if not (triple_free == greedy_ok == multi_ok):
            bad.append(Mismatch(code, triple_free, greedy_ok, multi_ok))
        code += 1
    return CrossCheckReport(n, total, nb, gp, tuple(bad))


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi style sample, deterministic in the seed."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if not 0 <= p <= 1:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return new_graph(n, edges)


def random_partition_family(
    n: int, seed: int
) -> tuple[frozenset[int], tuple[frozenset[int], ...]]:
    """Seeded random block structure: a (possibly empty) universal set plus
    independent parts, the parts ordered by minimum vertex.

    Singleton parts are legal; in the built graph their vertex simply comes
    out universal and is absorbed into p0 by the canonical partition.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    rng = random.Random(seed)
    slots = rng.randint(1, n)
    labels = [rng.randint(0, slots) for _ in range(n)]  # label 0 = universal block
    p0 = frozenset(v for v, lab in enumerate(labels) if lab == 0)
    groups: dict[int, list[int]] = {}
    for v, lab in enumerate(labels):
        if lab:
            groups.setdefault(lab, []).append(v)
    parts = tuple(
        frozenset(vs) for vs in sorted(groups.values(), key=min)
    )
    return p0, parts


def graph_from_family(
    n: int, p0: frozenset[int], parts: tuple[frozenset[int], ...]
) -> Graph:
    """The complete-multipartite-plus-universal graph realizing the blocks:
    p0 vertices are joined to everything, parts span no internal edge, and
    all cross-block pairs are joined."""
    owner: dict[int, int] = {}
    for i, block in enumerate((p0, *parts)):
        for v in block:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} is outside 0..{n - 1}")
            if v in owner:
                raise ValueError(f"vertex {v} appears in two blocks")
            owner[v] = i
    if len(owner) != n:
        raise ValueError("blocks must cover all vertices")
    edges = [
        (u, v)
        for u, v in combinations(range(n), 2)
        if owner[u] != owner[v] or owner[u] == 0
    ]
    return new_graph(n, edges)


def random_nb_graph(n: int, seed: int) -> Graph:
    """A random pattern-free graph, built from a random block structure."""
    p0, parts = random_partition_family(n, seed)
    return graph_from_family(n, p0, parts)
