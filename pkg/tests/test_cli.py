import json

import pytest

from helly_topo.cli import main


@pytest.fixture
def family_file(tmp_path):
    data = {
        "ambient": [[0, 1, 2], [1, 2, 3], [2, 3, 4]],
        "embedding_dim": 2,
        "members": [
            {"label": "A1", "simplices": [[0, 1, 2], [1, 2, 3]]},
            {"label": "A2", "simplices": [[1, 2, 3], [2, 3, 4]]},
        ],
    }
    path = tmp_path / "fam.json"
    path.write_text(json.dumps(data))
    return str(path)


@pytest.fixture
def disjoint_family_file(tmp_path):
    data = {
        "ambient": [[0, 1, 2], [3, 4, 5]],
        "embedding_dim": 2,
        "members": [
            {"label": "A1", "simplices": [[0, 1, 2]]},
            {"label": "A2", "simplices": [[3, 4, 5]]},
        ],
    }
    path = tmp_path / "disjoint.json"
    path.write_text(json.dumps(data))
    return str(path)


@pytest.fixture
def polygon_file(tmp_path):
    data = {
        "members": [
            {"label": "P1", "vertices": [[0, 0], [1, 0], [1, 1], [0, 1]]},
            {"label": "P2", "vertices": [[5, 0], [6, 0], [6, 1], [5, 1]]},
        ]
    }
    path = tmp_path / "polys.json"
    path.write_text(json.dumps(data))
    return str(path)


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out


def test_homology_command(family_file, capsys):
    code, out = run(["homology", "--in", family_file, "--member", "A1"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["tool"] == "helly-topo"
    assert report["command"] == "homology"
    assert report["result"]["betti"] == {"0": 0, "1": 0, "2": 0}
    assert "convention" in report


def test_homology_requires_member_for_multimember(family_file, capsys):
    code, _ = run(["homology", "--in", family_file], capsys)
    assert code == 3


def test_verify_helly_exit_zero(family_file, capsys):
    code, out = run(["verify", "helly", "--in", family_file, "--d", "2"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["result"]["theorem"] == "helly"
    assert report["result"]["hypotheses_hold"] is True
    assert report["result"]["conclusion_holds"] is True


def test_verify_exit_two_on_failed_hypotheses(disjoint_family_file, capsys):
    code, out = run(["verify", "sigma", "--in", disjoint_family_file], capsys)
    assert code == 2
    report = json.loads(out)
    assert report["result"]["hypotheses_hold"] is False


def test_verify_rational_field_flag(family_file, capsys):
    code, out = run(["verify", "prop-a", "--in", family_file, "--field", "q"], capsys)
    assert code == 0
    assert json.loads(out)["result"]["field"] == "q"


def test_verify_lemma_312(polygon_file, capsys):
    code, out = run(["verify", "lemma-312", "--in", polygon_file], capsys)
    assert code == 0
    assert json.loads(out)["result"]["passed"] is True


def test_verify_lemma_311_arity(polygon_file, capsys):
    code, _ = run(["verify", "lemma-311", "--in", polygon_file], capsys)
    assert code == 3  # needs exactly one member


def test_verify_thm_321_needs_six(polygon_file, capsys):
    code, _ = run(["verify", "thm-321", "--in", polygon_file], capsys)
    assert code == 3


def test_missing_input_file_exits_three(capsys):
    code, _ = run(["verify", "sigma", "--in", "/nonexistent/fam.json"], capsys)
    assert code == 3


def test_invalid_json_exits_three(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{nope")
    code, _ = run(["verify", "sigma", "--in", str(path)], capsys)
    assert code == 3


def test_sweep_byte_identical(capsys):
    argv = ["sweep", "--theorem", "sigma", "--grid", "8", "--m", "3",
            "--growth", "25", "--trials", "15", "--seed", "42"]
    code1, out1 = run(argv, capsys)
    code2, out2 = run(argv, capsys)
    assert code1 == code2 == 0
    assert out1 == out2
    report = json.loads(out1)
    assert report["result"]["counts"]["total"] == 15
    assert report["result"]["counts"]["conclusion_violated"] == 0


def test_sweep_transversal_tag(capsys):
    code, out = run(["sweep", "--theorem", "lemma-311", "--trials", "5", "--seed", "1"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["result"]["counts"]["conclusion_held"] == 5


def test_transversal_components(polygon_file, capsys):
    code, out = run(
        ["transversal", "components", "--in", polygon_file, "--resolution", "2048"],
        capsys,
    )
    assert code == 0
    report = json.loads(out)
    assert report["result"]["exact"]["component_count"] == 1
    assert report["result"]["counts_agree"] is True


def test_transversal_profile(polygon_file, capsys):
    code, out = run(["transversal", "profile", "--in", polygon_file], capsys)
    assert code == 0
    report = json.loads(out)
    panels = report["result"]["panels"]
    assert panels and all("upper" in p and "lower" in p for p in panels)
    assert report["result"]["identification"] == "(theta, p) ~ (theta + pi, -p)"


def test_out_flag_writes_file(family_file, tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code, out = run(
        ["verify", "helly", "--in", family_file, "--out", str(out_path)], capsys
    )
    assert code == 0
    assert out == ""
    assert json.loads(out_path.read_text())["result"]["conclusion_holds"] is True


def test_seed_is_echoed_in_sweep(capsys):
    code, out = run(["sweep", "--theorem", "sigma", "--grid", "8", "--m", "2",
                     "--growth", "20", "--trials", "5", "--seed", "77"], capsys)
    assert code == 0
    assert json.loads(out)["result"]["seed"] == 77
