"""Command-line interface: parsing, outputs, exit codes, determinism."""

import json
import math

import pytest

from unitdim.cli import EXIT_ERROR, EXIT_INCONCLUSIVE, EXIT_OK, main
from unitdim.graphs import family, format_graph_text, parse_graph_text


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# -- bounds ---------------------------------------------------------------------

def test_dim_wheel(capsys):
    code, out, _ = run(capsys, "dim", "W:6:1")
    assert code == EXIT_OK and out.strip() == "2"


def test_dim_join_literal(capsys):
    code, out, _ = run(capsys, "dim", "J(S:4,E:3)")
    assert code == EXIT_OK and out.strip() == "5"


def test_sdim_modes(capsys):
    code, out, _ = run(capsys, "sdim", "C:7")
    assert code == EXIT_OK and out.strip() == "2"
    code, out, _ = run(capsys, "sdim", "C:7", "--mode", "non-crossing")
    assert code == EXIT_OK and out.strip() == "3"


def test_explain_prints_rules(capsys):
    code, out, err = run(capsys, "dim", "W:6:2", "--explain")
    assert code == EXIT_OK and out.strip() == "4"
    assert "join-sum" in err and "join-split" in err


def test_bounds_json(capsys):
    code, out, _ = run(capsys, "dim", "K:5", "--json")
    data = json.loads(out)
    assert data["exact"] and data["lower"] == 4
    assert any(c["rule"] == "clique-registry" for c in data["certificates"])


def test_inconclusive_exit_code(capsys):
    # Rules-only engine cannot close the gap for this disconnected graph.
    code, out, _ = run(capsys, "sdim", "U(K:4,E:1)", "--no-embedder")
    assert code == EXIT_INCONCLUSIVE
    assert "inconclusive" in out


def test_neg_inf_output(capsys):
    code, out, _ = run(capsys, "sdim", "E:0")
    assert code == EXIT_OK and out.strip() == "-inf"


# -- graph arguments -----------------------------------------------------------

def test_unknown_family_lists_tags(capsys):
    code, _, err = run(capsys, "dim", "Q:4")
    assert code == EXIT_ERROR
    assert "K" in err and "PETAL" in err


def test_file_argument_round_trip(tmp_path, capsys):
    g = family("W:5:2")
    path = tmp_path / "wheel.graph"
    path.write_text(format_graph_text(g), encoding="utf-8")
    code, out, _ = run(capsys, "dim", str(path))
    assert code == EXIT_OK and out.strip() == "3"
    assert parse_graph_text(path.read_text(encoding="utf-8")) == g


def test_file_errors_name_lines(tmp_path, capsys):
    path = tmp_path / "bad.graph"
    path.write_text("3\n0 1\n0 x\n", encoding="utf-8")
    code, _, err = run(capsys, "dim", str(path))
    assert code == EXIT_ERROR and "line 3" in err


# -- radius -----------------------------------------------------------------------

def test_radius_polygon(capsys):
    code, out, _ = run(capsys, "radius", "polygon", "6", "1")
    assert code == EXIT_OK and out.strip() == "1.000000000000"


def test_radius_polygon_degenerate(capsys):
    code, out, _ = run(capsys, "radius", "polygon", "6", "2")
    assert code == EXIT_OK and out.strip() == "degenerate"


def test_radius_cone_and_simplex(capsys):
    code, out, _ = run(capsys, "radius", "cone", "0.5")
    assert out.strip() == f"{1/math.sqrt(3):.12f}"
    code, out, _ = run(capsys, "radius", "simplex", "4")
    assert out.strip() == f"{math.sqrt(3/8):.12f}"


def test_radius_iterate_divergence(capsys):
    code, out, _ = run(capsys, "radius", "iterate", "0.8", "50")
    assert code == EXIT_OK and out.startswith("diverged at step")


def test_radius_domain_error(capsys):
    code, _, err = run(capsys, "radius", "cone", "1.5")
    assert code == EXIT_ERROR and "error" in err


# -- embed ----------------------------------------------------------------------

def test_embed_outputs_json_and_svg(tmp_path, capsys):
    svg = tmp_path / "hexagon.svg"
    code, out, _ = run(capsys, "embed", "W:6:1", "--dim", "2",
                       "--seed", "3", "--svg", str(svg))
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["ambient_dim"] == 2
    assert data["certificate"]["verdict"] == "valid"
    assert svg.exists() and svg.stat().st_size > 0


def test_embed_inconclusive(capsys):
    code, out, _ = run(capsys, "embed", "K:4", "--dim", "2", "--restarts", "10")
    assert code == EXIT_INCONCLUSIVE
    assert "inconclusive after 10 restarts" in out


def test_embed_seed_determinism(capsys):
    code1, out1, _ = run(capsys, "embed", "K:4", "--dim", "3", "--seed", "5")
    code2, out2, _ = run(capsys, "embed", "K:4", "--dim", "3", "--seed", "5")
    assert code1 == code2 == EXIT_OK and out1 == out2


def test_embed_determinism_across_threads(capsys, monkeypatch):
    _, out1, _ = run(capsys, "embed", "C:5", "--dim", "2", "--seed", "2")
    monkeypatch.setenv("UNITDIM_THREADS", "3")
    _, out2, _ = run(capsys, "embed", "C:5", "--dim", "2", "--seed", "2")
    assert out1 == out2


# -- tables ----------------------------------------------------------------------

def test_tables_wheel_both_modes(capsys, tmp_path):
    code, out, _ = run(capsys, "tables", "wheel", "--mode", "crossings")
    assert code == EXIT_OK and "MISMATCH" not in out
    csv_path = tmp_path / "wheel.csv"
    fig_path = tmp_path / "wheel.png"
    code, out, _ = run(capsys, "tables", "wheel", "--mode", "non-crossing",
                       "--csv", str(csv_path), "--figure", str(fig_path))
    assert code == EXIT_OK
    assert csv_path.exists() and fig_path.exists()


def test_tables_polygon(capsys):
    code, out, _ = run(capsys, "tables", "polygon")
    assert code == EXIT_OK and "MISMATCH" not in out
    assert "degenerate" in out


# -- minors / petals / decompose ----------------------------------------------------

def test_minors_listing(capsys):
    code, out, _ = run(capsys, "minors", "K:3", "--proper")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "7 minors"


def test_minors_json(capsys):
    code, out, _ = run(capsys, "minors", "E:1", "--proper", "--json")
    data = json.loads(out)
    assert data == [{"vertex_count": 0, "edges": []}]


def test_petals_listing_and_index(capsys):
    code, out, _ = run(capsys, "petals", "3")
    assert code == EXIT_OK and out.splitlines()[0] == "4 petals with 3 edges"
    code, out, _ = run(capsys, "petals", "6", "--index", "0")
    assert code == EXIT_OK
    g = parse_graph_text(out)
    assert g.edge_count == 6


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "W:6:2")
    lines = out.splitlines()
    assert code == EXIT_OK and lines[0] == "2 join factor(s)"


def test_verify_minimal_cli(capsys):
    code, out, _ = run(capsys, "verify-minimal", "K:4", "--kind", "dim")
    assert code == EXIT_OK
    assert "verdict: minimal" in out
    code, out, _ = run(capsys, "verify-minimal", "W:6:1", "--kind", "dim",
                       "--mode", "non-crossing")
    assert code == EXIT_OK
    assert "verdict: not_minimal" in out


def test_verify_minimal_json(capsys):
    code, out, _ = run(capsys, "verify-minimal", "S:4", "--kind", "sdim", "--json")
    data = json.loads(out)
    assert code == EXIT_OK and data["verdict"] == "minimal" and data["value"] == 3
