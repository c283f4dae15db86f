"""Executable catalog of eigenvector-entry and spectral-radius bounds.

Each catalog entry evaluates one inequality or identity on a
:class:`~hyperq.parameters.ParameterReport` and yields a :class:`BoundCheck`
with the two sides, the signed slack in the satisfied direction, and a
note whenever the slack is numerically zero. Entries that cannot be
evaluated (disconnected input, a vanishing denominator, a hypothesis that
fails) are reported as not applicable with a reason instead of raising.

Record ids are stable keys used in the JSON report.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .config import CertifyConfig, SolverConfig
from .errors import UnknownId
from .hypergraph import Hypergraph
from .parameters import ParameterReport, parameter_report

LE, GE, EQ = "<=", ">=", "="

# equality conditions attached to catalog entries
REGULAR = "regular"
EDGE_REGULAR = "edge-regular"
SINGLE_VERTEX = "single-vertex"
REGULAR_OR_SEMI = "regular-or-semi-regular"


class NotApplicable(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


@dataclass(frozen=True)
class BoundCheck:
    id: str
    relation: str
    applicable: bool
    lhs: float | None = None
    rhs: float | None = None
    slack: float | None = None
    holds: bool | None = None
    reason: str | None = None
    equality_note: dict | None = None
    details: dict | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Entry:
    id: str
    relation: str
    condition: str | None
    evaluate: Callable[[ParameterReport], tuple]


def _need_edges(p: ParameterReport):
    if p.H.m == 0 or p.rho <= 0:
        raise NotApplicable("NoEdges")


def _vx(p: ParameterReport):
    _need_edges(p)
    return p.vertex


def _ex(p: ParameterReport):
    _need_edges(p)
    return p.edge


def _rho_bracket_lo(p):
    return p.rho, p.H.k * float(p.avg_degree)


def _rho_bracket_hi(p):
    return p.rho, float(p.H.k * p.Delta)


def _sum_lo(p):
    return float(p.spectral.x.sum()), 1.0


def _sum_hi(p):
    return float(p.spectral.x.sum()), math.sqrt(p.H.n)


def _weighted_sum_identity(p):
    x = p.spectral.x
    deg = np.asarray(p.profile.degrees, dtype=float)
    return p.rho * float(x.sum()), p.H.k * float(deg @ x)


def _diameter_bound(p):
    v = _vx(p)
    if p.H.m < 2:
        raise NotApplicable("TooFewEdges")
    lam2 = p.spectral.lambda2
    if lam2 is None or lam2 <= 1e-12:
        raise NotApplicable("ZeroLambda2")
    return v.x_min, 1.0 / math.sqrt(1.0 + (p.rho / lam2) ** (p.diameter - 1))


def _entry_bound_worst(p):
    _vx(p)
    x = p.spectral.x
    deg = np.asarray(p.profile.degrees, dtype=float)
    rhs = math.sqrt(p.H.k) * deg / p.rho
    slack = rhs - x
    i = int(np.argmin(slack))
    details = {"vertex": i, "per_vertex_slack": slack.tolist()}
    return float(x[i]), float(rhs[i]), details


def _entry_bound_min(p):
    return _vx(p).x_min, math.sqrt(p.H.k) * p.delta / p.rho


def _entry_bound_max(p):
    return _vx(p).x_max, math.sqrt(p.H.k) * p.Delta / p.rho


def _zagreb_bound(p):
    return _vx(p).x_max, p.rho / (p.H.k * math.sqrt(p.profile.zagreb))


def _min_degree_bound(p):
    v = _vx(p)
    k, d, n = p.H.k, p.delta, p.H.n
    den = p.rho ** 2 + k * d * d * (n - d)
    # min degree can exceed n for dense k-graphs, leaving the radicand undefined
    if den <= 1e-9 * p.rho ** 2:
        raise NotApplicable("UndefinedBound")
    return v.x_min, math.sqrt(k * d * d / den)


def _edge_count_bound(p):
    v = _vx(p)
    k, n, m, D = p.H.k, p.H.n, p.H.m, p.Delta
    return (k * n * D - k * k * m) * v.x_min, (k * D - p.rho) * math.sqrt(n)


def _gamma_average_bound(p):
    v = _vx(p)
    if p.regularity.is_regular:
        raise NotApplicable("RegularDegenerate")
    k, D, d = p.H.k, p.Delta, p.delta
    avg = float(p.avg_degree)
    den = (k * D - p.rho) * (avg - d)
    if den <= 0:
        raise NotApplicable("ZeroDenominator")
    return v.gamma, (p.rho - k * d) * (D - avg) / den


def _gamma_ratio_max(p):
    k = p.H.k
    return max(k * p.Delta / p.rho, p.rho / (k * p.delta))


def _gamma_ratio_bound(p):
    return _vx(p).gamma, _gamma_ratio_max(p)


def _ratio_geometric_mean(p):
    _need_edges(p)
    return _gamma_ratio_max(p), math.sqrt(p.Delta / p.delta)


def _spread_bound(p):
    v = _vx(p)
    D, d = p.Delta, p.delta
    return v.x_max - v.x_min, (math.sqrt(D) - math.sqrt(d)) / math.sqrt(p.H.n * D)


def _xmax_degree_bound(p):
    v = _vx(p)
    D, d, n = p.Delta, p.delta, p.H.n
    return v.x_max, D / math.sqrt(d * d + (n - 1) * D * D)


def _xmin_degree_bound(p):
    v = _vx(p)
    D, d, n = p.Delta, p.delta, p.H.n
    return v.x_min, d / math.sqrt(D * D + (n - 1) * d * d)


def _edge_min_vs_mean(p):
    return _ex(p).xe_min, math.sqrt(p.rho / p.H.m)


def _edge_max_vs_mean(p):
    return _ex(p).xe_max, math.sqrt(p.rho / p.H.m)


def _xmax_edge_count(p):
    return _vx(p).x_max, math.sqrt(p.rho / (p.H.k ** 2 * p.H.m))


def _edge_min_lo(p):
    return _ex(p).xe_min, p.H.k * p.vertex.x_min


def _edge_min_hi(p):
    return _ex(p).xe_min, p.rho / p.delta * p.vertex.x_min


def _edge_max_lo(p):
    return _ex(p).xe_max, p.rho / p.Delta * p.vertex.x_max


def _edge_max_hi(p):
    return _ex(p).xe_max, p.H.k * p.vertex.x_max


def _Gamma_lo(p):
    e = _ex(p)
    return e.Gamma, p.delta / p.Delta * p.vertex.gamma


def _Gamma_hi(p):
    e = _ex(p)
    return e.Gamma, p.vertex.gamma


def _rho_edge_sums_lo(p):
    _need_edges(p)
    return p.rho, float(p.regularity.edge_degree_sum_min)


def _rho_edge_sums_hi(p):
    _need_edges(p)
    return p.rho, float(p.regularity.edge_degree_sum_max)


def _make_characterization(eq_tol: float):
    def evaluate(p):
        e = _ex(p)
        spectral = 1.0 if abs(e.Gamma - 1.0) <= eq_tol else 0.0
        exact = 1.0 if p.regularity.is_edge_regular else 0.0
        return spectral, exact, {"Gamma": e.Gamma}
    return evaluate


CATALOG: tuple[Entry, ...] = (
    Entry("L2.4.lo", GE, REGULAR, _rho_bracket_lo),
    Entry("L2.4.hi", LE, REGULAR, _rho_bracket_hi),
    Entry("C2.7.lo", GE, SINGLE_VERTEX, _sum_lo),
    Entry("C2.7.hi", LE, REGULAR, _sum_hi),
    Entry("L2.8", EQ, None, _weighted_sum_identity),
    Entry("C3.3", LE, None, _diameter_bound),
    Entry("T3.4", LE, None, _entry_bound_worst),
    Entry("T3.4.min", LE, None, _entry_bound_min),
    Entry("T3.4.max", LE, None, _entry_bound_max),
    Entry("T3.6", GE, REGULAR, _zagreb_bound),
    Entry("T3.7", LE, REGULAR, _min_degree_bound),
    Entry("T3.8", LE, REGULAR, _edge_count_bound),
    Entry("T3.9", GE, REGULAR_OR_SEMI, _gamma_average_bound),
    Entry("T3.10.a", GE, REGULAR, _gamma_ratio_bound),
    Entry("T3.10.b", GE, REGULAR, _ratio_geometric_mean),
    Entry("T3.11", GE, REGULAR, _spread_bound),
    Entry("T3.12a", GE, REGULAR, _xmax_degree_bound),
    Entry("T3.12b", LE, REGULAR, _xmin_degree_bound),
    Entry("T4.2.lo", LE, REGULAR, _edge_min_vs_mean),
    Entry("T4.2.hi", GE, REGULAR, _edge_max_vs_mean),
    Entry("C4.3", GE, REGULAR, _xmax_edge_count),
    Entry("T4.5a.lo", GE, REGULAR, _edge_min_lo),
    Entry("T4.5a.hi", LE, REGULAR, _edge_min_hi),
    Entry("T4.5b.lo", GE, REGULAR, _edge_max_lo),
    Entry("T4.5b.hi", LE, REGULAR, _edge_max_hi),
    Entry("C4.6.lo", GE, REGULAR, _Gamma_lo),
    Entry("C4.6.hi", LE, REGULAR, _Gamma_hi),
    Entry("T4.12.lo", GE, EDGE_REGULAR, _rho_edge_sums_lo),
    Entry("T4.12.hi", LE, EDGE_REGULAR, _rho_edge_sums_hi),
    Entry("T4.8", EQ, None, None),
)
CATALOG_IDS: tuple[str, ...] = tuple(e.id for e in CATALOG)
_BY_ID = {e.id: e for e in CATALOG}


def _condition_met(condition: str, p: ParameterReport) -> bool | None:
    if condition == REGULAR:
        return p.regularity.is_regular
    if condition == EDGE_REGULAR:
        return p.regularity.is_edge_regular
    if condition == SINGLE_VERTEX:
        return p.H.n == 1
    # semi-regularity of general k-graphs is not classified
    return True if p.regularity.is_regular else None


def _slack(relation: str, lhs: float, rhs: float) -> float:
    if relation == LE:
        return rhs - lhs
    if relation == GE:
        return lhs - rhs
    return -abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs))


def check_bound(bound_id: str, p: ParameterReport, cfg: CertifyConfig = CertifyConfig()) -> BoundCheck:
    try:
        entry = _BY_ID[bound_id]
    except KeyError:
        raise UnknownId(bound_id) from None
    if not p.connected:
        return BoundCheck(bound_id, entry.relation, False, reason="NotConnected")
    evaluate = entry.evaluate or _make_characterization(cfg.eq_tol)
    try:
        out = evaluate(p)
    except NotApplicable as exc:
        return BoundCheck(bound_id, entry.relation, False, reason=exc.reason)
    lhs, rhs = float(out[0]), float(out[1])
    details = out[2] if len(out) > 2 else None
    slack = _slack(entry.relation, lhs, rhs)
    note = None
    if entry.relation != EQ and abs(slack) <= cfg.eq_tol:
        note = {
            "observed": True,
            "condition": entry.condition,
            "condition_met": _condition_met(entry.condition, p) if entry.condition else None,
        }
    return BoundCheck(bound_id, entry.relation, True, lhs, rhs, slack,
                      slack >= -cfg.slack_tol, None, note, details)


@dataclass(frozen=True)
class CertificateReport:
    params: ParameterReport = field(repr=False)
    bounds: tuple[BoundCheck, ...]

    @property
    def violations(self) -> list[BoundCheck]:
        return [b for b in self.bounds if b.applicable and not b.holds]

    @property
    def n_applicable(self) -> int:
        return sum(b.applicable for b in self.bounds)

    @property
    def verdict(self) -> str:
        if self.violations:
            return "fail"
        return "pass" if self.n_applicable else "not-applicable"


def certify(H: Hypergraph, solver: SolverConfig = SolverConfig(),
            cfg: CertifyConfig = CertifyConfig()) -> CertificateReport:
    p = parameter_report(H, solver)
    return CertificateReport(p, tuple(check_bound(i, p, cfg) for i in CATALOG_IDS))


@dataclass
class CorpusSummary:
    count: int = 0
    applicable: dict[str, int] = field(default_factory=dict)
    worst_slack: dict[str, float] = field(default_factory=dict)
    # (corpus index, id, slack)
    violations: list[tuple[int, str, float]] = field(default_factory=list)
    # id -> corpus indices where equality was observed
    equalities: dict[str, list[int]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations


def _certify_one(args):
    H, solver, cfg = args
    return certify(H, solver, cfg).bounds


def corpus_certify(corpus: Sequence[Hypergraph], solver: SolverConfig = SolverConfig(),
                   cfg: CertifyConfig = CertifyConfig(), workers: int | None = None) -> CorpusSummary:
    """Certify every member and aggregate in input order."""
    jobs = [(H, solver, cfg) for H in corpus]
    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_certify_one, jobs))
    else:
        results = [_certify_one(j) for j in jobs]

    summary = CorpusSummary(count=len(results))
    for idx, bounds in enumerate(results):
        for b in bounds:
            if not b.applicable:
                continue
            summary.applicable[b.id] = summary.applicable.get(b.id, 0) + 1
            summary.worst_slack[b.id] = min(summary.worst_slack.get(b.id, math.inf), b.slack)
            if not b.holds:
                summary.violations.append((idx, b.id, b.slack))
            if b.equality_note:
                summary.equalities.setdefault(b.id, []).append(idx)
    return summary
