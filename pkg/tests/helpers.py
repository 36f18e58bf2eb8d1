"""Shared test utilities: small named graphs, independent brute-force
oracles, and hypothesis strategies.

The oracles here deliberately avoid the package's bitmask machinery (plain
dicts and itertools) so that agreement tests actually compare two routes.
"""

from __future__ import annotations

import random
from itertools import combinations

from hypothesis import strategies as st

from raagv import Graph, Letter, new_graph


def empty_graph(n: int) -> Graph:
    return new_graph(n, [])


def complete_graph(n: int) -> Graph:
    return new_graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return new_graph(a + b, [(u, v) for u in range(a) for v in range(a, a + b)])


def forbidden_pattern_graph() -> Graph:
    """Three vertices, one edge: the smallest non-embeddable graph."""
    return new_graph(3, [(0, 1)])


def induced_subgraph(g: Graph, keep: list[int]) -> Graph:
    """Subgraph induced on ``keep``, vertices renumbered by position."""
    keep = sorted(set(keep))
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[u], pos[v]) for u, v in combinations(keep, 2) if g.has_edge(u, v)]
    return new_graph(len(keep), edges)


# ---------------------------------------------------------------- oracles

def brute_is_nb(g: Graph) -> bool:
    """Pattern-free iff no three vertices span exactly one edge."""
    for t in combinations(range(g.n), 3):
        spanned = sum(1 for u, v in combinations(t, 2) if g.has_edge(u, v))
        if spanned == 1:
            return False
    return True


def brute_least_triple(g: Graph) -> tuple[int, int, int] | None:
    """Lexicographically least (a, b, c) with (a, b) an edge and c adjacent
    to neither, by scanning every ordered candidate."""
    best = None
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if not g.has_edge(a, b):
                continue
            for c in range(g.n):
                if c in (a, b) or g.has_edge(a, c) or g.has_edge(b, c):
                    continue
                t = (a, b, c)
                if best is None or t < best:
                    best = t
    return best


def slow_eccentricity(g: Graph, v: int) -> int | None:
    """Dict-and-list BFS, independent of the bitmask implementation."""
    dist = {v: 0}
    frontier = [v]
    while frontier:
        nxt = []
        for u in frontier:
            for w in range(g.n):
                if g.has_edge(u, w) and w not in dist:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    if len(dist) < g.n:
        return None
    return max(dist.values())


def predicted_canonical_family(
    n: int, p0: frozenset[int], parts: tuple[frozenset[int], ...]
) -> tuple[frozenset[int], frozenset[frozenset[int]]]:
    """Expected canonical family of the graph built from these blocks:
    singleton parts come out universal (n >= 2) and migrate into p0, while
    the sole vertex of a one-vertex graph never counts as universal."""
    if n == 1:
        return frozenset(), frozenset({frozenset({0})})
    absorbed = set(p0)
    kept = []
    for part in parts:
        if len(part) == 1:
            absorbed.update(part)
        else:
            kept.append(part)
    return frozenset(absorbed), frozenset(kept)


def random_word(rng: random.Random, n: int, length: int) -> tuple[Letter, ...]:
    return tuple(
        Letter(rng.randrange(n), rng.choice((1, -1))) for _ in range(length)
    )


# ------------------------------------------------------------- strategies

@st.composite
def graphs(draw, max_n: int = 8, min_n: int = 0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    code = draw(st.integers(0, (1 << len(pairs)) - 1))
    return new_graph(n, [pairs[i] for i in range(len(pairs)) if code >> i & 1])


@st.composite
def abstract_words(draw, max_vertex: int = 9, max_len: int = 30):
    pairs = draw(
        st.lists(
            st.tuples(st.integers(0, max_vertex), st.sampled_from((1, -1))),
            max_size=max_len,
        )
    )
    return tuple(Letter(v, s) for v, s in pairs)
