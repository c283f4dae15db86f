import itertools
import math

import numpy as np
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hyperq import build_hypergraph, connectivity_metrics

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("default")


@st.composite
def hypergraphs(draw, max_n=8, ks=(2, 3, 4), max_m=10):
    k = draw(st.sampled_from(ks))
    n = draw(st.integers(k, max_n))
    pool = list(itertools.combinations(range(n), k))
    m = draw(st.integers(0, min(max_m, len(pool))))
    idx = draw(st.lists(st.integers(0, len(pool) - 1), min_size=m, max_size=m, unique=True))
    return build_hypergraph(n, k, [pool[i] for i in idx])


@st.composite
def connected_hypergraphs(draw, max_n=9, ks=(2, 3, 4), max_m=12):
    """Spanning hypertree grown edge by edge, then extra random edges."""
    k = draw(st.sampled_from(ks))
    n = draw(st.integers(k, max_n))
    order = draw(st.permutations(range(n)))
    edges = set()
    covered = [order[0]]
    rest = list(order[1:])
    while rest:
        anchor = draw(st.sampled_from(covered))
        fresh = rest[: k - 1]
        rest = rest[k - 1:]
        pad_pool = [v for v in covered if v != anchor]
        need = k - 1 - len(fresh)
        pad = draw(st.permutations(pad_pool))[:need] if need else []
        e = tuple(sorted([anchor, *fresh, *pad]))
        edges.add(e)
        covered.extend(fresh)
    pool = [e for e in itertools.combinations(range(n), k) if e not in edges]
    extra = draw(st.integers(0, min(max_m, len(pool))))
    if extra:
        idx = draw(st.lists(st.integers(0, len(pool) - 1), min_size=extra, max_size=extra, unique=True))
        edges.update(pool[i] for i in idx)
    H = build_hypergraph(n, k, sorted(edges))
    assert connectivity_metrics(H).connected
    return H


def unit_positive(rng, n):
    v = rng.random(n) + 1e-3
    return v / np.linalg.norm(v)


def brute_q(H):
    """Q entry by entry from the definition: number of edges containing both endpoints."""
    Q = np.zeros((H.n, H.n), dtype=np.int64)
    for u in range(H.n):
        for v in range(H.n):
            Q[u, v] = sum(1 for e in H.edges if u in e and v in e)
    return Q


SQRT3 = math.sqrt(3.0)
# exact from the characteristic polynomial l^2 (l - 1)(l^2 - 8l + 13)
FIG1_RHO = 4 + SQRT3
FIG1_LAMBDA2 = 4 - SQRT3


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
