"""Scalar parameters of the principal eigenvector.

Vertex-level extremes (x_min, x_max, gamma = x_max / x_min), edge-level
extremes over the edge sums x(e) (Gamma = x(max) / x(min)), and exact
regularity / edge-regularity verdicts from integer degrees.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .config import SolverConfig
from .errors import (
    BadExponents,
    BadParams,
    InternalIdentityViolation,
    NoEdges,
    NotConnected,
    NotEdgeRegular,
)
from .hypergraph import (
    Connectivity,
    DegreeProfile,
    Hypergraph,
    connectivity_metrics,
    degree_profile,
)
from .spectra import SpectralResult, edge_sums, signless_laplacian, spectral_analysis

TIE_TOL = 1e-9


@dataclass(frozen=True)
class VertexExtremes:
    x_min: float
    x_max: float
    argmin: frozenset[int]
    argmax: frozenset[int]
    gamma: float


@dataclass(frozen=True)
class EdgeExtremes:
    xe_min: float
    xe_max: float
    argmin: frozenset[int]
    argmax: frozenset[int]
    Gamma: float


@dataclass(frozen=True)
class RegularityReport:
    is_regular: bool
    is_edge_regular: bool
    # None when there are no edges
    edge_degree_sum_min: int | None
    edge_degree_sum_max: int | None
    constant_D: int | None
    # edge indices (min-sum edge, max-sum edge) when not edge-regular
    witness: tuple[int, int] | None


def _require_connected(H: Hypergraph, conn: Connectivity | None = None):
    conn = conn or connectivity_metrics(H)
    if not conn.connected:
        raise NotConnected("parameter needs a connected hypergraph")


def vertex_extremes(H: Hypergraph, spectral: SpectralResult) -> VertexExtremes:
    _require_connected(H)
    x = spectral.x
    lo, hi = float(x.min()), float(x.max())
    return VertexExtremes(
        x_min=lo,
        x_max=hi,
        argmin=frozenset(np.flatnonzero(x <= lo + TIE_TOL).tolist()),
        argmax=frozenset(np.flatnonzero(x >= hi - TIE_TOL).tolist()),
        gamma=hi / lo,
    )


def edge_extremes(H: Hypergraph, spectral: SpectralResult) -> EdgeExtremes:
    _require_connected(H)
    if H.m == 0:
        raise NoEdges("edge extremes need at least one edge")
    xe = edge_sums(H, spectral.x).values
    lo, hi = float(xe.min()), float(xe.max())
    return EdgeExtremes(
        xe_min=lo,
        xe_max=hi,
        argmin=frozenset(np.flatnonzero(xe <= lo + TIE_TOL).tolist()),
        argmax=frozenset(np.flatnonzero(xe >= hi - TIE_TOL).tolist()),
        Gamma=hi / lo,
    )


def edge_degree_sums(H: Hypergraph) -> list[int]:
    """Sum of vertex degrees over each edge, in canonical edge order."""
    deg = degree_profile(H).degrees
    return [sum(deg[v] for v in e) for e in H.edges]


def regularity_report(H: Hypergraph) -> RegularityReport:
    prof = degree_profile(H)
    is_regular = prof.max_degree == prof.min_degree
    sums = edge_degree_sums(H)
    if not sums:
        return RegularityReport(is_regular, True, None, None, None, None)
    lo, hi = min(sums), max(sums)
    if lo == hi:
        return RegularityReport(is_regular, True, lo, hi, lo, None)
    return RegularityReport(is_regular, False, lo, hi, None, (sums.index(lo), sums.index(hi)))


def edge_regular_closed_form(H: Hypergraph) -> tuple[float, np.ndarray]:
    """Exact principal eigenpair of an edge-regular hypergraph.

    With constant edge degree sum D, rho = D and x_u = d(u) / sqrt(D m).
    """
    _require_connected(H)
    if H.m == 0:
        raise NoEdges("closed form needs at least one edge")
    reg = regularity_report(H)
    if not reg.is_edge_regular:
        raise NotEdgeRegular(
            f"edge degree sums range over [{reg.edge_degree_sum_min}, {reg.edge_degree_sum_max}]")
    rho = float(reg.constant_D)
    x = np.asarray(degree_profile(H).degrees, dtype=float) / math.sqrt(rho * H.m)
    if abs(np.linalg.norm(x) - 1.0) > 1e-9:
        raise InternalIdentityViolation("closed-form vector is not unit length")
    if np.max(np.abs(signless_laplacian(H) @ x - rho * x)) > 1e-9:
        raise InternalIdentityViolation("closed-form vector is not an eigenvector")
    return rho, x


def lagrange_sum_bound(n: int, r: int, s: int) -> float:
    """Max of sum x_i**r over positive x with sum x_i**s == 1, i.e. n**((s-r)/s)."""
    if n < 1:
        raise BadParams(f"n must be >= 1, got {n}")
    if not 1 <= r <= s:
        raise BadExponents(f"need 1 <= r <= s, got r={r}, s={s}")
    return float(n) ** ((s - r) / s)


@dataclass(frozen=True)
class ParameterReport:
    """Everything the bound catalog reads, computed once per hypergraph."""

    H: Hypergraph = field(repr=False)
    profile: DegreeProfile
    connectivity: Connectivity = field(repr=False)
    spectral: SpectralResult
    regularity: RegularityReport
    # None when H is disconnected (or has no edges, for the edge extremes)
    vertex: VertexExtremes | None
    edge: EdgeExtremes | None

    @property
    def connected(self) -> bool:
        return self.connectivity.connected

    @property
    def diameter(self) -> int | None:
        return self.connectivity.diameter

    @property
    def rho(self) -> float:
        return self.spectral.rho

    @property
    def delta(self) -> int:
        return self.profile.min_degree

    @property
    def Delta(self) -> int:
        return self.profile.max_degree

    @property
    def avg_degree(self) -> Fraction:
        return self.profile.avg_degree


def parameter_report(H: Hypergraph, cfg: SolverConfig = SolverConfig()) -> ParameterReport:
    conn = connectivity_metrics(H)
    spectral = spectral_analysis(H, cfg)
    vertex = edge = None
    if conn.connected:
        vertex = vertex_extremes(H, spectral)
        if H.m:
            edge = edge_extremes(H, spectral)
    return ParameterReport(H, degree_profile(H), conn, spectral, regularity_report(H), vertex, edge)
