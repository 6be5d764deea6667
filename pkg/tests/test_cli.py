import json

import pytest

from fallkolor.cli import main
from fallkolor.graph import cycle_graph, read_dimacs, write_dimacs


def run(*argv):
    return main([str(a) for a in argv])


def test_kneser_command(tmp_path, capsys):
    out = tmp_path / "kg52.dimacs"
    assert run("kneser", 5, 2, "-o", out) == 0
    g = read_dimacs(out.read_text())
    assert (g.vertex_count, g.edge_count) == (10, 15)
    assert (tmp_path / "kg52.dimacs.manifest.json").exists()
    assert run("kneser", 4, 2) == 0
    assert "p edge 6 3" in capsys.readouterr().out


def test_kneser_bad_params(capsys):
    assert run("kneser", 2, 3) == 2
    assert "m > n" in capsys.readouterr().err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as info:
        run("kneser", "x", 2)
    assert info.value.code == 2


def test_spectrum_kneser(tmp_path):
    out = tmp_path / "kg72"
    assert run("spectrum", "--kneser", 7, 2, "-o", out) == 0
    data = json.loads((out / "spectrum.json").read_text())
    assert data["spectrum"] == [7] and not data["partial"]
    assert (out / "coloring_k7.json").exists()
    assert (tmp_path / "kg72.manifest.json").exists()


def test_spectrum_c5_file(tmp_path, capsys):
    path = tmp_path / "c5.dimacs"
    path.write_text(write_dimacs(cycle_graph(5)))
    assert run("spectrum", path) == 0
    assert json.loads(capsys.readouterr().out)["spectrum"] == []


def test_spectrum_single_k_kg73(capsys):
    assert run("spectrum", "--kneser", 7, 3, "--k", 8) == 0
    assert json.loads(capsys.readouterr().out)["attained"] is False


def test_spectrum_inconclusive(monkeypatch, capsys):
    monkeypatch.setenv("FALLKOLOR_NODE_BUDGET", "10")
    assert run("spectrum", "--kneser", 9, 2) == 3
    assert "unresolved" in capsys.readouterr().err


def test_construct_design_then_verify(tmp_path, capsys):
    kg = tmp_path / "kg92.dimacs"
    col = tmp_path / "c12.json"
    assert run("kneser", 9, 2, "-o", kg) == 0
    assert run("construct", "design", "--n", 9, "--m", 2, "--sts", "-o", col) == 0
    assert col.read_text().startswith("# provenance:")
    assert run("verify", kg, col) == 0
    assert "fall 12-coloring" in capsys.readouterr().out
    assert run("verify", "--kneser", 9, 2, col) == 0


def test_verify_failure(tmp_path, capsys):
    kg = tmp_path / "kg42.dimacs"
    run("kneser", 4, 2, "-o", kg)
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"k": 1, "classes": [["{1,2}", "{1,3}", "{1,4}", "{2,3}", "{2,4}", "{3,4}"]]}))
    assert run("verify", kg, bad) == 1
    assert "fail" in capsys.readouterr().out


def test_construct_star_triangle_and_design_file(tmp_path):
    col = tmp_path / "st.json"
    assert run("construct", "star-triangle", "--n", 10, "-o", col) == 0
    assert run("verify", "--kneser", 10, 2, col) == 0
    sts = tmp_path / "sts7.txt"
    assert run("sts", 7, "-o", sts) == 0
    assert run("design-verify", sts) == 0
    col2 = tmp_path / "d.json"
    assert run("construct", "design", "--n", 7, "--design", sts, "-o", col2) == 0
    assert run("verify", "--kneser", 7, 2, col2) == 0


def test_design_verify_failure(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 7 3 1 2\n1 2 4\n2 3 5\n")
    assert run("design-verify", bad) == 1


def test_construct_lift_reports_unverified(tmp_path, capsys):
    col = tmp_path / "c7.json"
    run("construct", "design", "--n", 7, "--sts", "-o", col)
    assert run("construct", "lift", "--n", 7, "--m", 2, "--from", col) == 4
    assert "not type-II" in capsys.readouterr().err


def test_construct_prop4_unverified():
    assert run("construct", "prop4", "--n", 7, "--m", 3) == 4


def test_construct_parameter_errors():
    assert run("construct", "star-triangle", "--n", 9) == 2
    assert run("construct", "design", "--n", 9) == 2
    assert run("construct", "lift", "--n", 7) == 2


def test_bounds(capsys):
    assert run("bounds", 7, 2) == 0
    assert capsys.readouterr().out.strip() == "lower 6, upper 11, exact {7}"
    assert run("bounds", 9, 3) == 0
    assert "exact unknown" in capsys.readouterr().out
    assert run("bounds", 11, 2) == 0
    assert "exact {}" in capsys.readouterr().out


def test_manifest_determinism(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for out in (a, b):
        assert run("spectrum", "--kneser", 8, 2, "-o", out) == 0
    for name in ("spectrum.json", "coloring_k8.json"):
        assert (a / name).read_bytes() == (b / name).read_bytes()
    ma = json.loads((tmp_path / "a.manifest.json").read_text())
    assert ma["command"] == "spectrum" and ma["parameters"]["kneser"] == [8, 2]
