"""Named hypergraphs and parameterized families."""
from __future__ import annotations

import itertools
import math

import numpy as np

from .errors import BadParams, Infeasible, RetriesExhausted
from .hypergraph import Hypergraph, build_hypergraph, connectivity_metrics

MAX_ATTEMPTS = 1000


def example_fig1() -> Hypergraph:
    """3-graph on 5 vertices with edges 123, 145, 345 (1-based)."""
    return build_hypergraph(5, 3, [[0, 1, 2], [0, 3, 4], [2, 3, 4]])


def complete_kgraph(n: int, k: int) -> Hypergraph:
    if not n >= k >= 2:
        raise BadParams(f"complete k-graph needs n >= k >= 2, got n={n}, k={k}")
    return build_hypergraph(n, k, itertools.combinations(range(n), k))


def cyclic_kgraph(n: int, k: int) -> Hypergraph:
    """Edges are the n cyclic windows {i, ..., i+k-1} mod n. k-regular."""
    if not n > k >= 2:
        raise BadParams(f"cyclic k-graph needs n > k >= 2, got n={n}, k={k}")
    return build_hypergraph(n, k, [[(i + j) % n for j in range(k)] for i in range(n)])


def star_graph(n: int) -> Hypergraph:
    """K_{1,n-1} with center 0."""
    if n < 3:
        raise BadParams(f"star needs n >= 3, got {n}")
    return build_hypergraph(n, 2, [[0, i] for i in range(1, n)])


def path_graph(n: int) -> Hypergraph:
    if n < 2:
        raise BadParams(f"path needs n >= 2, got {n}")
    return build_hypergraph(n, 2, [[i, i + 1] for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Hypergraph:
    """K_{a,b}: semi-regular, hence edge-regular with edge degree sum a + b."""
    if a < 1 or b < 1:
        raise BadParams(f"complete bipartite needs a, b >= 1, got {a}, {b}")
    return build_hypergraph(a + b, 2, [[i, a + j] for i in range(a) for j in range(b)])


def _stream(seed: int, attempt: int) -> np.random.Generator:
    # counter-based generator keyed on (seed, attempt): no shared state
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, attempt])))


def random_connected_kgraph(n: int, k: int, m: int, seed: int = 0) -> Hypergraph:
    """m distinct k-subsets drawn uniformly, redrawn until connected.

    Each attempt uses its own stream keyed on ``(seed, attempt)``, so the
    result depends only on the arguments.
    """
    if not 2 <= k <= n:
        raise BadParams(f"need 2 <= k <= n, got n={n}, k={k}")
    total = math.comb(n, k)
    if m > total:
        raise Infeasible(f"only {total} distinct {k}-sets on {n} vertices, asked for {m}")
    if m * (k - 1) < n - 1:
        raise Infeasible(f"{m} edges of size {k} cannot connect {n} vertices")

    for attempt in range(MAX_ATTEMPTS):
        rng = _stream(seed, attempt)
        edges: set[tuple[int, ...]] = set()
        while len(edges) < m:
            edges.add(tuple(sorted(rng.choice(n, size=k, replace=False).tolist())))
        H = build_hypergraph(n, k, sorted(edges))
        if connectivity_metrics(H).connected:
            return H
    raise RetriesExhausted(f"no connected sample after {MAX_ATTEMPTS} attempts")


def power_blocks(n: int, m: int, k: int, r: int, s: int) -> tuple[list[range], list[range]]:
    """Vertex ids of the clones of each base vertex and the padding of each base edge.

    Clones of base vertex v are ``v*s .. v*s+s-1``; padding of base edge j
    is ``n*s + j*(r-k*s) ..`` (r - k*s ids).
    """
    if s < 1 or r < k * s:
        raise BadParams(f"power hypergraph needs s >= 1 and r >= k*s, got r={r}, s={s}, k={k}")
    pad = r - k * s
    clones = [range(v * s, v * s + s) for v in range(n)]
    padding = [range(n * s + j * pad, n * s + (j + 1) * pad) for j in range(m)]
    return clones, padding


def power_hypergraph(H: Hypergraph, r: int, s: int) -> Hypergraph:
    """Replace each vertex by s clones and pad each edge with r - k*s new vertices."""
    clones, padding = power_blocks(H.n, H.m, H.k, r, s)
    edges = []
    for j, e in enumerate(H.edges):
        new = list(padding[j])
        for v in e:
            new.extend(clones[v])
        edges.append(new)
    return build_hypergraph(H.n * s + H.m * (r - H.k * s), r, edges)
