"""Membership in the class of graphs whose graph group embeds into
Thompson's group V, decided two independent ways.

The obstruction is a triple of vertices spanning exactly one edge: two
adjacent vertices plus a third adjacent to neither (the graph of Z^2 * Z).
A graph avoids that pattern exactly when its complement is a disjoint union
of cliques, i.e. when the graph itself is complete multipartite with some
universal vertices.  ``find_forbidden_triple`` scans for the pattern
directly; ``recognize_multipartite`` checks the complement structure and
hands back the canonical commuting partition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, complement, connected_components, is_clique, universal_vertices
from .partition import CommutingPartition


@dataclass(frozen=True)
class ForbiddenTriple:
    """Witness (a, b, c): (a, b) is an edge and c is adjacent to neither.

    Normalized so that a < b; c is unconstrained apart from distinctness.
    """

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if len({self.a, self.b, self.c}) != 3:
            raise ValueError("witness vertices must be pairwise distinct")
        if self.a >= self.b:
            raise ValueError("witness edge must be normalized with a < b")

    def holds_in(self, g: Graph) -> bool:
        """True iff this triple actually certifies g."""
        return (
            g.has_edge(self.a, self.b)
            and not g.has_edge(self.a, self.c)
            and not g.has_edge(self.b, self.c)
        )


def find_forbidden_triple(g: Graph) -> ForbiddenTriple | None:
    """The least witness triple, or None when the graph has none.

    Scans edge pairs (a, b) in lexicographic order and candidate third
    vertices ascending, which makes the result the lexicographically least
    valid (a, b, c) and therefore deterministic.
    """
    full = (1 << g.n) - 1
    for a, b in g.edges():
        blocked = g.adj[a] | g.adj[b] | 1 << a | 1 << b
        free = full & ~blocked
        if free:
            c = (free & -free).bit_length() - 1
            return ForbiddenTriple(a, b, c)
    return None


def is_nb(g: Graph) -> bool:
    """True when g avoids the forbidden pattern entirely."""
    return find_forbidden_triple(g) is None


def recognize_multipartite(g: Graph) -> CommutingPartition | None:
    """Canonical commuting partition via the complement, or None.

    Succeeds exactly when every complement component is a clique of the
    complement.  Singleton components whose vertex is universal in g make up
    p0; the remaining components, ordered by minimum vertex, are the parts.
    The universality proviso matters only on the one-vertex graph, whose sole
    vertex has eccentricity 0 and therefore stays out of p0.
    """
    co = complement(g)
    comps = connected_components(co)
    for comp in comps:
        if not is_clique(co, comp):
            return None
    uni = universal_vertices(g)
    p0 = []
    parts = []
    for comp in comps:
        if len(comp) == 1 and comp[0] in uni:
            p0.append(comp[0])
        else:
            parts.append(frozenset(comp))
    return CommutingPartition(frozenset(p0), tuple(parts))
