"""The ``.hgr`` text format and JSON reports.

An ``.hgr`` document is a header line ``k n m`` followed by m lines of k
1-based vertex indices. Lines starting with ``#`` and blank lines are
skipped. :func:`serialize_hgr` writes the canonical form, which
:func:`parse_hgr` maps back to an identical hypergraph.
"""
from __future__ import annotations

import json
import math
from pathlib import Path

from .bounds import CertificateReport
from .errors import HeaderMismatch, HgrSyntaxError
from .hypergraph import Hypergraph, build_hypergraph
from .parameters import ParameterReport


def _ints(line: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise HgrSyntaxError(lineno, f"expected integers, got {line.strip()!r}") from None


def parse_hgr(text: str) -> Hypergraph:
    data = [(i, ln) for i, ln in enumerate(text.splitlines(), 1)
            if ln.strip() and not ln.lstrip().startswith("#")]
    if not data:
        raise HgrSyntaxError(1, "missing 'k n m' header")
    lineno, header = data[0]
    fields = _ints(header, lineno)
    if len(fields) != 3:
        raise HgrSyntaxError(lineno, "header must be 'k n m'")
    k, n, m = fields
    body = data[1:]
    if len(body) != m:
        raise HeaderMismatch(f"header declares {m} edges, found {len(body)}")
    # 1-based in the file; 0 becomes -1 and is rejected as out of range
    edges = [[v - 1 for v in _ints(ln, i)] for i, ln in body]
    return build_hypergraph(n, k, edges)


def serialize_hgr(H: Hypergraph) -> str:
    lines = [f"{H.k} {H.n} {H.m}"]
    lines += [" ".join(str(v + 1) for v in e) for e in H.edges]
    return "\n".join(lines) + "\n"


def read_hgr(path) -> Hypergraph:
    return parse_hgr(Path(path).read_text())


def write_hgr(H: Hypergraph, path) -> None:
    Path(path).write_text(serialize_hgr(H))


def _real(v):
    if v is None:
        return None
    v = float(v)
    if not math.isfinite(v):
        return None
    return float(f"{v:.12g}")


def _bound_dict(b) -> dict:
    return {
        "id": b.id,
        "lhs": _real(b.lhs),
        "rhs": _real(b.rhs),
        "relation": b.relation,
        "slack": _real(b.slack),
        "holds": b.holds,
        "applicable": b.applicable,
        "reason": b.reason,
        "equality_note": b.equality_note,
    }


def report_dict(report: ParameterReport | CertificateReport) -> dict:
    """Fixed-order dict for an analysis (ParameterReport) or a certificate."""
    if isinstance(report, CertificateReport):
        p, bounds = report.params, report.bounds
    else:
        p, bounds = report, None
    s, v, e, reg = p.spectral, p.vertex, p.edge, p.regularity
    out = {
        "n": p.H.n,
        "k": p.H.k,
        "m": p.H.m,
        "connected": p.connected,
        "diameter": p.diameter,
        "rho": _real(s.rho),
        "lambda2": _real(s.lambda2),
        "residual": _real(s.residual),
        "x": [_real(t) for t in s.x],
        "degrees": list(p.profile.degrees),
        "zagreb": p.profile.zagreb,
        "gamma": _real(v.gamma) if v else None,
        "Gamma": _real(e.Gamma) if e else None,
        "x_min": _real(v.x_min) if v else None,
        "x_max": _real(v.x_max) if v else None,
        "xe_min": _real(e.xe_min) if e else None,
        "xe_max": _real(e.xe_max) if e else None,
        "is_regular": reg.is_regular,
        "is_edge_regular": reg.is_edge_regular,
        "constant_D": reg.constant_D,
    }
    if bounds is not None:
        out["bounds"] = [_bound_dict(b) for b in bounds]
    return out


def report_json(report: ParameterReport | CertificateReport) -> str:
    return json.dumps(report_dict(report), indent=2) + "\n"
