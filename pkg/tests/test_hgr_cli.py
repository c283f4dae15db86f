import json

import pytest
from hypothesis import given

from hyperq import (
    build_hypergraph,
    certify,
    cyclic_kgraph,
    example_fig1,
    parameter_report,
    parse_hgr,
    report_json,
    serialize_hgr,
    star_graph,
)
from hyperq.cli import main
from hyperq.errors import HeaderMismatch, HgrSyntaxError, NonUniformEdge, VertexOutOfRange

from conftest import hypergraphs

FIG1_TEXT = "3 5 3\n1 2 3\n1 4 5\n3 4 5\n"

REPORT_KEYS = ["n", "k", "m", "connected", "diameter", "rho", "lambda2", "residual", "x",
               "degrees", "zagreb", "gamma", "Gamma", "x_min", "x_max", "xe_min", "xe_max",
               "is_regular", "is_edge_regular", "constant_D"]
BOUND_KEYS = ["id", "lhs", "rhs", "relation", "slack", "holds", "applicable", "reason",
              "equality_note"]


def test_parse_fig1():
    assert parse_hgr(FIG1_TEXT) == example_fig1()
    assert parse_hgr("# comment\n3 5 3  \n3 2 1\n\n1 5 4\t\n# more\n5 4 3\n") == example_fig1()


def test_parse_single_edge():
    H = parse_hgr("2 2 1\n1 2\n")
    assert (H.n, H.k, H.edges) == (2, 2, ((0, 1),))


@pytest.mark.parametrize("text,exc", [
    ("3 5 2\n1 2 3\n1 4 5\n3 4 5\n", HeaderMismatch),
    ("3 5\n1 2 3\n", HgrSyntaxError),
    ("", HgrSyntaxError),
    ("3 5 1\n1 two 3\n", HgrSyntaxError),
    ("3 5 1\n1 2\n", NonUniformEdge),
    ("3 5 1\n0 1 2\n", VertexOutOfRange),
    ("3 5 1\n1 2 6\n", VertexOutOfRange),
])
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_hgr(text)


def test_syntax_error_reports_line():
    with pytest.raises(HgrSyntaxError) as info:
        parse_hgr("# c\n3 5 1\n1 x 3\n")
    assert info.value.line == 3


def test_serialize():
    assert serialize_hgr(example_fig1()) == FIG1_TEXT
    assert serialize_hgr(build_hypergraph(3, 2, [])) == "2 3 0\n"


@given(hypergraphs())
def test_round_trip_bytes(H):
    text = serialize_hgr(H)
    assert parse_hgr(text) == H
    assert serialize_hgr(parse_hgr(text)) == text


def test_report_star():
    doc = json.loads(report_json(certify(star_graph(4))))
    assert list(doc) == REPORT_KEYS + ["bounds"]
    assert doc["rho"] == pytest.approx(4.0, abs=1e-9)
    assert doc["Gamma"] == 1.0
    assert doc["is_edge_regular"] is True and doc["is_regular"] is False
    assert all(list(b) == BOUND_KEYS for b in doc["bounds"])


def test_report_regular_and_disconnected():
    doc = json.loads(report_json(certify(cyclic_kgraph(6, 3))))
    assert doc["gamma"] == 1.0
    hi = next(b for b in doc["bounds"] if b["id"] == "L2.4.hi")
    assert abs(hi["slack"]) <= 1e-9
    doc = json.loads(report_json(certify(build_hypergraph(6, 3, [[0, 1, 2], [3, 4, 5]]))))
    assert doc["connected"] is False and doc["diameter"] is None
    assert not any(b["applicable"] for b in doc["bounds"])


def test_analysis_report_has_no_bounds():
    doc = json.loads(report_json(parameter_report(example_fig1())))
    assert list(doc) == REPORT_KEYS


def test_twelve_significant_digits():
    doc = json.loads(report_json(parameter_report(example_fig1())))
    assert doc["rho"] == 5.73205080757
    assert all(len(repr(v).replace(".", "").lstrip("0")) <= 12 for v in doc["x"])


@pytest.fixture
def fig1_file(tmp_path):
    path = tmp_path / "fig1.hgr"
    path.write_text(FIG1_TEXT)
    return path


def test_cli_analyze_json_deterministic(fig1_file, capsys):
    assert main(["analyze", str(fig1_file), "--json"]) == 0
    first = capsys.readouterr().out
    assert main(["analyze", str(fig1_file), "--json"]) == 0
    assert capsys.readouterr().out == first
    assert json.loads(first)["degrees"] == [2, 1, 2, 2, 2]


def test_cli_analyze_text(fig1_file, capsys):
    assert main(["analyze", str(fig1_file)]) == 0
    assert "zagreb" in capsys.readouterr().out


def test_cli_certify(fig1_file, capsys):
    assert main(["certify", str(fig1_file)]) == 0
    out = capsys.readouterr().out
    assert "verdict=pass" in out
    assert main(["certify", str(fig1_file), "--json", "--slack", "1e-8", "--eq-tol", "1e-7"]) == 0
    assert len(json.loads(capsys.readouterr().out)["bounds"]) == 30


def test_cli_certify_violation_exit_code(tmp_path, capsys):
    path = tmp_path / "k2.hgr"
    path.write_text("2 2 1\n1 2\n")
    assert main(["certify", str(path)]) == 2
    assert "T3.7" in capsys.readouterr().out


def test_cli_certify_corpus(tmp_path, capsys):
    for i, n in enumerate([5, 6, 7]):
        assert main(["generate", "cyclic", "--n", str(n), "--k", "3", "-o", str(tmp_path / f"c{i}.hgr")]) == 0
    assert main(["certify", "--corpus", str(tmp_path), "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert [d["file"] for d in doc] == ["c0.hgr", "c1.hgr", "c2.hgr"]


def test_cli_input_errors(tmp_path, capsys):
    bad = tmp_path / "bad.hgr"
    bad.write_text("3 5 2\n1 2 3\n")
    assert main(["analyze", str(bad)]) == 1
    assert main(["analyze", str(tmp_path / "missing.hgr")]) == 1
    assert main(["certify"]) == 1
    assert main(["generate", "cyclic", "--n", "5", "-o", str(tmp_path / "x.hgr")]) == 1


def test_cli_no_convergence_exit_code(fig1_file):
    assert main(["analyze", str(fig1_file), "--tol", "1e-14", "--max-iter", "2"]) == 3


def test_cli_spectrum(fig1_file, capsys):
    assert main(["spectrum", str(fig1_file)]) == 0
    vals = [float(v) for v in capsys.readouterr().out.split()]
    assert vals[0] == pytest.approx(5.732050807569) and len(vals) == 5
    assert main(["spectrum", str(fig1_file), "--dense-limit", "3"]) == 1


def test_cli_generate_families(tmp_path):
    out = tmp_path / "g.hgr"
    for argv in (["example-fig1"], ["complete", "--n", "5", "--k", "3"], ["star", "--n", "4"],
                 ["random", "--n", "8", "--k", "3", "--m", "6", "--seed", "1"],
                 ["path", "--n", "4"], ["bipartite", "--n", "2", "--m", "3"]):
        assert main(["generate", *argv, "-o", str(out)]) == 0
        parse_hgr(out.read_text())
    base = tmp_path / "p4.hgr"
    main(["generate", "path", "--n", "4", "-o", str(base)])
    assert main(["generate", "power", "--base", str(base), "--r", "5", "--s", "2", "-o", str(out)]) == 0
    assert out.read_text().startswith("5 11 3\n")
    assert main(["generate", "example-fig1", "-o", str(out)]) == 0
    assert out.read_text() == FIG1_TEXT
