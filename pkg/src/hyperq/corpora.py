"""Reproducible corpora used by the acceptance suite and the scripts."""
from __future__ import annotations

import math
import random

from .generators import (
    complete_bipartite,
    complete_kgraph,
    cyclic_kgraph,
    example_fig1,
    path_graph,
    power_hypergraph,
    random_connected_kgraph,
    star_graph,
)
from .hypergraph import Hypergraph


def random_corpus(count: int, seed: int = 0, ks=(2, 3, 4), max_n: int = 12) -> list[Hypergraph]:
    """Random connected k-graphs with a few edges beyond the connectivity minimum."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        k = rng.choice(ks)
        n = rng.randint(k + 1, max_n)
        lo = -(-(n - 1) // (k - 1))
        hi = min(math.comb(n, k), lo + 8)
        m = rng.randint(min(lo + 1, hi), hi)
        out.append(random_connected_kgraph(n, k, m, seed=seed * 100_003 + len(out)))
    return out


def regular_corpus() -> list[Hypergraph]:
    """20 connected regular hypergraphs from the cyclic, complete and power families."""
    out = [cyclic_kgraph(n, k) for n, k in
           [(5, 2), (8, 2), (6, 3), (7, 3), (9, 3), (6, 4), (9, 4), (8, 5), (10, 5), (11, 6)]]
    out += [complete_kgraph(n, k) for n, k in [(4, 2), (6, 2), (4, 3), (5, 3), (6, 3), (6, 4)]]
    # unpadded powers of regular bases stay regular
    out += [power_hypergraph(cyclic_kgraph(n, k), k * s, s) for n, k, s in
            [(5, 2, 2), (6, 3, 2), (4, 2, 3), (7, 2, 2)]]
    return out


def edge_regular_bases() -> list[Hypergraph]:
    """Edge-regular but mostly non-regular graphs: stars and complete bipartite graphs."""
    return ([star_graph(n) for n in (3, 4, 5, 7)]
            + [complete_bipartite(a, b) for a, b in [(1, 1), (2, 3), (2, 5), (3, 4)]]
            + [cyclic_kgraph(6, 3), complete_kgraph(5, 3)])


def power_corpus() -> list[Hypergraph]:
    """Powers of edge-regular bases (edge-regular) and of two irregular ones."""
    out = []
    for H in edge_regular_bases():
        for s, pad in [(1, 1), (2, 0), (2, 1)]:
            out.append(power_hypergraph(H, H.k * s + pad, s))
    out += [power_hypergraph(example_fig1(), 7, 2), power_hypergraph(path_graph(5), 5, 2)]
    return out


def mixed_corpus(seed: int = 0) -> list[Hypergraph]:
    return (regular_corpus() + edge_regular_bases() + power_corpus()
            + [example_fig1(), path_graph(4), path_graph(7)] + random_corpus(40, seed))
