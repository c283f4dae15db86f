"""k-uniform hypergraphs and their combinatorial invariants.

Vertices are the integers ``0..n-1``. Edges are stored as strictly
ascending tuples and the edge list is kept in lexicographic order, so two
hypergraphs with the same edge *sets* compare equal.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BadUniformity,
    DuplicateEdge,
    DuplicateVertexInEdge,
    EmptySet,
    NonUniformEdge,
    VertexOutOfRange,
)

Edge = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    n: int
    k: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.k < 2:
            raise BadUniformity(f"uniformity must be >= 2, got {self.k}")
        if self.n < 1:
            raise VertexOutOfRange(f"need at least one vertex, got n={self.n}")
        canon = []
        for raw in self.edges:
            raw = [int(v) for v in raw]
            if len(set(raw)) != len(raw):
                raise DuplicateVertexInEdge(f"edge {raw} repeats a vertex")
            if len(raw) != self.k:
                raise NonUniformEdge(f"edge {raw} has {len(raw)} vertices, expected {self.k}")
            for v in raw:
                if not 0 <= v < self.n:
                    raise VertexOutOfRange(f"vertex {v} not in [0, {self.n})")
            canon.append(tuple(sorted(raw)))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise DuplicateEdge(f"edge {a} appears twice")
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices containing each vertex."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for j, e in enumerate(self.edges):
            for v in e:
                inc[v].append(j)
        return tuple(tuple(row) for row in inc)

    def check_vertex(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} not in [0, {self.n})")
        return v


def build_hypergraph(n: int, k: int, edges: Iterable[Sequence[int]]) -> Hypergraph:
    """Validate and canonicalize a k-uniform hypergraph on vertices 0..n-1."""
    return Hypergraph(int(n), int(k), tuple(tuple(e) for e in edges))


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    m: int
    max_degree: int
    min_degree: int
    avg_degree: Fraction
    zagreb: int

    @property
    def avg_degree_float(self) -> float:
        return float(self.avg_degree)


def degree_profile(H: Hypergraph) -> DegreeProfile:
    degrees = tuple(len(row) for row in H.incident)
    return DegreeProfile(
        degrees=degrees,
        m=H.m,
        max_degree=max(degrees),
        min_degree=min(degrees),
        avg_degree=Fraction(sum(degrees), H.n),
        zagreb=sum(d * d for d in degrees),
    )


def set_degree(H: Hypergraph, alpha: Iterable[int]) -> int:
    """Number of edges containing every vertex of ``alpha``."""
    alpha = {H.check_vertex(int(v)) for v in alpha}
    if not alpha:
        raise EmptySet("set degree needs a non-empty vertex set")
    return sum(1 for e in H.edges if alpha.issubset(e))


@dataclass(frozen=True)
class Neighborhood:
    open: frozenset[int]
    closed: frozenset[int]
    incident_edges: frozenset[int]


def neighborhoods(H: Hypergraph, v: int) -> Neighborhood:
    H.check_vertex(v)
    inc = H.incident[v]
    closed = {v}
    for j in inc:
        closed.update(H.edges[j])
    return Neighborhood(frozenset(closed - {v}), frozenset(closed), frozenset(inc))


@dataclass(frozen=True)
class Connectivity:
    connected: bool
    distance: np.ndarray = field(repr=False)
    # None when disconnected
    diameter: int | None


def connectivity_metrics(H: Hypergraph) -> Connectivity:
    """All-pairs walk distances by BFS over the vertex-edge incidence.

    Unreachable pairs get distance -1.
    """
    n = H.n
    dist = np.full((n, n), -1, dtype=np.int64)
    for src in range(n):
        row = dist[src]
        row[src] = 0
        seen_edges = set()
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for j in H.incident[u]:
                if j in seen_edges:
                    continue
                seen_edges.add(j)
                for w in H.edges[j]:
                    if row[w] < 0:
                        row[w] = row[u] + 1
                        queue.append(w)
    connected = bool((dist >= 0).all())
    diameter = int(dist.max()) if connected else None
    dist.setflags(write=False)
    return Connectivity(connected, dist, diameter)


@dataclass(frozen=True)
class CliqueMultigraph:
    n: int
    pair_counts: np.ndarray = field(repr=False)


def clique_multigraph(H: Hypergraph) -> CliqueMultigraph:
    """One multigraph edge {u, v} per hyperedge containing both u and v."""
    counts = np.zeros((H.n, H.n), dtype=np.int64)
    for e in H.edges:
        for a in range(len(e)):
            for b in range(a + 1, len(e)):
                counts[e[a], e[b]] += 1
                counts[e[b], e[a]] += 1
    counts.setflags(write=False)
    return CliqueMultigraph(H.n, counts)


@dataclass(frozen=True)
class RowSumCheck:
    lhs: int
    rhs: int
    holds: bool


def row_sum_identity_check(H: Hypergraph, v: int) -> RowSumCheck:
    """Sum of pair degrees d({v,u}) over the closed neighborhood against k*d(v).

    The diagonal term d({v,v}) is read as d(v).
    """
    nb = neighborhoods(H, v)
    d_v = len(H.incident[v])
    lhs = d_v + sum(set_degree(H, (v, u)) for u in nb.open)
    rhs = H.k * d_v
    return RowSumCheck(lhs, rhs, lhs == rhs)
