"""Command-line interface.

Exit codes: 0 success, 1 input or parse error, 2 an applicable bound was
violated (``certify``), 3 eigensolver did not converge.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import generators
from .bounds import certify
from .config import CertifyConfig, SolverConfig
from .errors import BadParams, HyperqError, NoConvergence
from .hgr import read_hgr, report_dict, report_json, write_hgr
from .parameters import parameter_report
from .spectra import full_spectrum, signless_laplacian

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION, EXIT_NOCONV = 0, 1, 2, 3

FAMILIES = ("example-fig1", "complete", "cyclic", "star", "path", "bipartite", "random", "power")


def _solver(args) -> SolverConfig:
    return SolverConfig(tol=args.tol, max_iter=args.max_iter)


def _fmt(v) -> str:
    return "-" if v is None else f"{v:.12g}"


def cmd_analyze(args) -> int:
    p = parameter_report(read_hgr(args.file), _solver(args))
    if args.json:
        sys.stdout.write(report_json(p))
        return EXIT_OK
    for key, val in report_dict(p).items():
        if key == "x":
            val = " ".join(_fmt(t) for t in val)
        print(f"{key:16} {val}")
    return EXIT_OK


def _print_certificate(name, report):
    p = report.params
    print(f"{name}: n={p.H.n} k={p.H.k} m={p.H.m} rho={_fmt(p.rho)} "
          f"verdict={report.verdict} ({report.n_applicable} applicable)")
    for b in report.bounds:
        if not b.applicable:
            print(f"  {b.id:10} n/a ({b.reason})")
            continue
        status = "ok  " if b.holds else "FAIL"
        eq = "  [equality]" if b.equality_note else ""
        print(f"  {b.id:10} {status} {_fmt(b.lhs)} {b.relation} {_fmt(b.rhs)}  "
              f"slack={b.slack:.3e}{eq}")


def cmd_certify(args) -> int:
    if bool(args.file) == bool(args.corpus):
        print("certify: give exactly one of FILE or --corpus DIR", file=sys.stderr)
        return EXIT_INPUT
    cfg = CertifyConfig(slack_tol=args.slack, eq_tol=args.eq_tol)
    if args.file:
        paths = [Path(args.file)]
    else:
        paths = sorted(Path(args.corpus).glob("*.hgr"))
    reports = [(path.name, certify(read_hgr(path), _solver(args), cfg)) for path in paths]

    if args.json:
        if args.file:
            sys.stdout.write(report_json(reports[0][1]))
        else:
            doc = [{"file": name, **report_dict(r)} for name, r in reports]
            sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        for name, r in reports:
            _print_certificate(name, r)
        if args.corpus:
            bad = sum(1 for _, r in reports if r.violations)
            print(f"{len(reports)} files, {bad} with violations")
    return EXIT_VIOLATION if any(r.violations for _, r in reports) else EXIT_OK


def cmd_spectrum(args) -> int:
    H = read_hgr(args.file)
    w = full_spectrum(signless_laplacian(H), args.dense_limit)
    if args.json:
        print(json.dumps([float(f"{v:.12g}") for v in w]))
    else:
        for v in w:
            print(_fmt(v))
    return EXIT_OK


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise BadParams(f"{args.family} needs {' '.join(missing)}")


def cmd_generate(args) -> int:
    fam = args.family
    if fam == "example-fig1":
        H = generators.example_fig1()
    elif fam == "complete":
        _need(args, "n", "k")
        H = generators.complete_kgraph(args.n, args.k)
    elif fam == "cyclic":
        _need(args, "n", "k")
        H = generators.cyclic_kgraph(args.n, args.k)
    elif fam == "star":
        _need(args, "n")
        H = generators.star_graph(args.n)
    elif fam == "path":
        _need(args, "n")
        H = generators.path_graph(args.n)
    elif fam == "bipartite":
        _need(args, "n", "m")
        H = generators.complete_bipartite(args.n, args.m)
    elif fam == "random":
        _need(args, "n", "k", "m")
        H = generators.random_connected_kgraph(args.n, args.k, args.m, args.seed)
    else:
        _need(args, "base", "r", "s")
        H = generators.power_hypergraph(read_hgr(args.base), args.r, args.s)
    write_hgr(H, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hyperq", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def solver_flags(p):
        p.add_argument("--tol", type=float, default=1e-10, help="eigen-residual tolerance")
        p.add_argument("--max-iter", type=int, default=100_000)

    p = sub.add_parser("analyze", help="parameters and spectrum summary")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    solver_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("certify", help="evaluate the bound catalog")
    p.add_argument("file", nargs="?")
    p.add_argument("--corpus", metavar="DIR", help="certify every *.hgr in DIR")
    p.add_argument("--json", action="store_true")
    p.add_argument("--slack", type=float, default=1e-8, help="violation tolerance on slack")
    p.add_argument("--eq-tol", type=float, default=1e-7, help="equality detection tolerance")
    solver_flags(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("spectrum", help="all eigenvalues of Q, descending")
    p.add_argument("file")
    p.add_argument("--dense-limit", type=int, default=512)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("generate", help="write a generated hypergraph")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--base", help="base .hgr file for the power family")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_generate)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NoConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOCONV
    except (HyperqError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
