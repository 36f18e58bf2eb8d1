"""Commuting partitions of a graph.

A commuting partition splits the vertices into a distinguished block p0 (the
eccentricity-one vertices) and parts P1..Pk such that every part spans no
edge and every pair of vertices from different blocks is adjacent.  A graph
admits one exactly when it avoids the three-vertex pattern "one edge plus a
vertex adjacent to neither endpoint"; on such graphs the partition is unique
as an unordered family of blocks.

This module has the greedy construction (with pluggable pivot rules), the
validator for the defining conditions, and the canonical complement-based
partition.  Construction failures are converted into forbidden-triple
witnesses.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Sequence

from .graphs import Graph, _mask, universal_vertices

if TYPE_CHECKING:
    from .classify import ForbiddenTriple


@dataclass(frozen=True)
class CommutingPartition:
    """Block structure: p0 plus nonempty parts.

    Two partitions describe the same block structure exactly when their
    :meth:`family` views agree; the order of ``parts`` is presentation only.
    """

    p0: frozenset[int]
    parts: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if any(not part for part in self.parts):
            raise ValueError("parts must be nonempty")

    def blocks(self) -> tuple[frozenset[int], ...]:
        """All blocks, p0 first; parts occupy indices 1..len(parts)."""
        return (self.p0, *self.parts)

    def family(self) -> tuple[frozenset[int], frozenset[frozenset[int]]]:
        """Order-free view used for partition equality."""
        return (self.p0, frozenset(self.parts))


@dataclass(frozen=True)
class InternalEdge:
    """Edge (u, v) inside part number ``part`` (1-based; p0 is block 0)."""

    u: int
    v: int
    part: int


@dataclass(frozen=True)
class MissingCrossEdge:
    """Non-adjacent pair u in block i, v in block j, ``blocks`` = (i, j), i < j."""

    u: int
    v: int
    blocks: tuple[int, int]


@dataclass(frozen=True)
class WrongP0:
    """Vertex whose p0 membership disagrees with the eccentricity-one set."""

    vertex: int
    should_be_in_p0: bool


Violation = InternalEdge | MissingCrossEdge | WrongP0


def validate_partition(g: Graph, p: CommutingPartition) -> Violation | None:
    """Check the three conditions of a commuting partition; None means valid.

    Violations surface in a fixed deterministic order: p0 membership first
    (vertices ascending), then internal edges (parts ascending, vertex pairs
    ascending), then missing cross edges (block index pairs ascending,
    vertices ascending).

    Raises ValueError when the blocks are not a partition of g's vertex set
    (overlap or non-coverage); that is a malformed input, not a Violation.
    """
    blocks = p.blocks()
    union = 0
    for block in blocks:
        for v in block:
            if not 0 <= v < g.n:
                raise ValueError(f"vertex {v} is outside 0..{g.n - 1}")
        mask = _mask(block)
        if union & mask:
            raise ValueError("blocks overlap")
        union |= mask
    if union != (1 << g.n) - 1:
        raise ValueError("blocks do not cover the vertex set")

    ecc_one = universal_vertices(g)
    for v in range(g.n):
        if (v in p.p0) != (v in ecc_one):
            return WrongP0(v, should_be_in_p0=v in ecc_one)

    for k, part in enumerate(p.parts, start=1):
        verts = sorted(part)
        for i, u in enumerate(verts):
            for v in verts[i + 1 :]:
                if g.has_edge(u, v):
                    return InternalEdge(u, v, k)

    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            for u in sorted(blocks[i]):
                for v in sorted(blocks[j]):
                    if not g.has_edge(u, v):
                        return MissingCrossEdge(u, v, (i, j))
    return None


PivotRule = Callable[[Sequence[int]], int]


def min_pivot(remaining: Sequence[int]) -> int:
    """Default pivot rule: the smallest remaining vertex."""
    return remaining[0]


def seeded_pivot(seed: int) -> PivotRule:
    """A pivot rule drawing uniformly from the remaining set, reproducibly."""
    rng = random.Random(seed)
    return lambda remaining: rng.choice(remaining)


@dataclass(frozen=True)
class GreedyRun:
    """Raw outcome of the block-building loop, parts in discovery order with
    the pivot that generated each one."""

    p0: frozenset[int]
    parts: tuple[frozenset[int], ...]
    pivots: tuple[int, ...]


def run_greedy(g: Graph, pivot_rule: PivotRule = min_pivot) -> GreedyRun:
    """One pass of the greedy builder: p0 is the eccentricity-one set, then
    each round splits off a pivot together with its unassigned non-neighbors.

    Always terminates in at most n rounds because the pivot itself (loop-free,
    hence a non-neighbor of itself) lands in the part it generates.
    """
    p0 = universal_vertices(g)
    remaining = set(range(g.n)) - p0
    parts: list[frozenset[int]] = []
    pivots: list[int] = []
    while remaining:
        w = pivot_rule(tuple(sorted(remaining)))
        if w not in remaining:
            raise ValueError("pivot rule chose a vertex outside the remaining set")
        part = frozenset(v for v in remaining if not g.has_edge(w, v))
        parts.append(part)
        pivots.append(w)
        remaining -= part
    return GreedyRun(p0, tuple(parts), tuple(pivots))


def greedy_partition(
    g: Graph, pivot_rule: PivotRule = min_pivot
) -> CommutingPartition | ForbiddenTriple:
    """Build a commuting partition greedily, or produce a witness.

    On graphs that admit a commuting partition every pivot rule reaches the
    same unordered block family; the returned partition lists parts sorted by
    minimum vertex.  When validation of the constructed blocks fails, the
    offending block is traced back to a forbidden triple: an edge inside a
    part pairs with that part's pivot, and a missing cross edge pairs the
    later block's vertex with the earlier part's pivot.
    """
    # imported here: classify depends on this module for the partition type
    from .classify import ForbiddenTriple, find_forbidden_triple

    run = run_greedy(g, pivot_rule)
    candidate = CommutingPartition(run.p0, run.parts)
    violation = validate_partition(g, candidate)
    if violation is None:
        return CommutingPartition(run.p0, tuple(sorted(run.parts, key=min)))

    triple = _witness_from_violation(run, violation)
    if triple is not None and triple.holds_in(g):
        return triple
    fallback = find_forbidden_triple(g)
    if fallback is None:
        raise AssertionError("greedy construction failed on a triple-free graph")
    return fallback


def _witness_from_violation(run: GreedyRun, violation: Violation) -> ForbiddenTriple | None:
    from .classify import ForbiddenTriple

    if isinstance(violation, InternalEdge):
        w = run.pivots[violation.part - 1]
        u, v = violation.u, violation.v
        if w in (u, v):
            return None
        # u, v both landed in w's part, so neither is adjacent to w
        return ForbiddenTriple(min(u, v), max(u, v), w)
    if isinstance(violation, MissingCrossEdge):
        i, j = violation.blocks
        if i == 0:
            return None  # p0 vertices are universal; cannot happen for greedy output
        w = run.pivots[i - 1]
        u, v = violation.u, violation.v
        if u == w:
            return None
        # v stayed unassigned when w's part formed, so (v, w) is an edge,
        # while u is adjacent to neither v nor its own pivot w
        return ForbiddenTriple(min(v, w), max(v, w), u)
    return None


def canonical_partition(g: Graph) -> CommutingPartition | ForbiddenTriple:
    """The complement-component partition when one exists, else the
    lexicographically least forbidden triple."""
    # imported here: classify depends on this module for the partition type
    from .classify import find_forbidden_triple, recognize_multipartite

    part = recognize_multipartite(g)
    if part is not None:
        return part
    witness = find_forbidden_triple(g)
    if witness is None:
        raise AssertionError("recognizer rejected a triple-free graph")
    return witness
