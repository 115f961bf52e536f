import json

import pytest

from anick.cli import main

XYZ = "vars: x > y > z\nrelations:\n  x^2 + y*x\n  x*z\n  z*y\n"
YXSQ_LOW = "vars: x < y\nrelations:\n  x^2 - y*x\n"


@pytest.fixture
def xyz_file(tmp_path):
    path = tmp_path / "xyz.alg"
    path.write_text(XYZ)
    return str(path)


@pytest.fixture
def yxsq_file(tmp_path):
    path = tmp_path / "yxsq.alg"
    path.write_text(YXSQ_LOW)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_gldim_json_payload(capsys, xyz_file):
    report = run_json(
        capsys, "gldim", "--input", xyz_file, "--max-deg", "8", "--format", "json"
    )
    payload = report["payload"]
    assert payload["gldim"] == 4
    assert payload["dim_A1"] == 3
    assert payload["conjecture_counterexample"] is True
    assert payload["dual_certificate"] == "certified-complete"
    assert payload["koszul"] == "koszul-up-to(8)"
    assert set(report) == {"command", "config", "payload", "timing"}


def test_gb_certified_quadratic_basis(capsys, yxsq_file):
    report = run_json(capsys, "gb", "--input", yxsq_file, "--max-deg", "6")
    payload = report["payload"]
    assert payload["basis"] == ["y*x - x^2"]
    assert payload["certificate"] == "certified-complete"


def test_gb_truncated_certificate(capsys, xyz_file):
    report = run_json(capsys, "gb", "--input", xyz_file, "--max-deg", "6")
    assert report["payload"]["certificate"] == "complete-up-to-degree(6)"
    assert len(report["payload"]["basis"]) == 7


def test_hilbert_payload(capsys, xyz_file):
    report = run_json(capsys, "hilbert", "--input", xyz_file, "--max-deg", "8")
    assert report["payload"]["hilbert"] == [1, 3, 6, 11, 20, 36, 64, 113, 199]


def test_betti_payload(capsys, xyz_file):
    report = run_json(
        capsys, "betti", "--input", xyz_file, "--max-deg", "6", "--max-level", "4"
    )
    assert report["payload"]["diagonal"] == [1, 3, 3, 2, 1]
    assert all(all(row) for row in report["payload"]["reliable"])


def test_koszul_payload(capsys, xyz_file):
    report = run_json(capsys, "koszul", "--input", xyz_file, "--max-deg", "6")
    assert report["payload"]["verdict"] == "koszul-up-to(6)"


def test_dual_payload(capsys, xyz_file):
    report = run_json(capsys, "dual", "--input", xyz_file)
    dual = report["payload"]["dual"]
    assert dual["vars"] == "x! > y! > z!"
    assert "x!^2 - y!*x!" in dual["relations"]
    assert len(dual["relations"]) == 6


def test_chains_payload(capsys, xyz_file):
    report = run_json(
        capsys, "chains", "--input", xyz_file, "--max-deg", "4", "--max-level", "3"
    )
    levels = report["payload"]["chains"]
    assert levels[0]["count"] == 3
    level1 = {entry["word"] for entry in levels[1]["chains"]}
    assert level1 == {"x^2", "x*y*x", "x*y^2*x", "x*z", "z*y"}


def test_resolution_payload_composes_to_zero(capsys, xyz_file):
    report = run_json(
        capsys, "resolution", "--input", xyz_file, "--max-deg", "4", "--max-level", "2"
    )
    slices = report["payload"]["slices"]
    assert slices
    assert all(s["composes_to_zero"] for s in slices if s["level"] >= 1)


def test_graph_dot_output(capsys, xyz_file):
    code, out, err = run(capsys, "graph", "--input", xyz_file, "--max-deg", "6")
    assert code == 0
    assert out.startswith("digraph chains {")
    assert '"x" -> "x^2|1";' in out


def test_graph_json_output(capsys, xyz_file):
    report = run_json(
        capsys, "graph", "--input", xyz_file, "--max-deg", "6", "--format", "json"
    )
    graph = report["payload"]["graph"]
    ids = {node["id"] for node in graph["nodes"]}
    assert {"x", "y", "z"} <= ids


def test_json_reports_are_byte_stable(capsys, xyz_file):
    outputs = []
    for _ in range(2):
        code, out, err = run(
            capsys, "gldim", "--input", xyz_file, "--max-deg", "6", "--format", "json"
        )
        assert code == 0
        parsed = json.loads(out)
        parsed.pop("timing")
        outputs.append(json.dumps(parsed, indent=2))
    assert outputs[0] == outputs[1]


def test_stdin_input(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(XYZ))
    code, out, err = run(capsys, "hilbert", "--max-deg", "4")
    assert code == 0
    assert json.loads(out)["payload"]["hilbert"] == [1, 3, 6, 11, 20]


def test_parse_error_exits_one(capsys, tmp_path):
    bad = tmp_path / "bad.alg"
    bad.write_text("vars: x > x\nrelations:\n")
    code, out, err = run(capsys, "gb", "--input", str(bad))
    assert code == 1
    assert "duplicate" in err


def test_missing_file_exits_one(capsys):
    code, out, err = run(capsys, "gb", "--input", "/nonexistent/file.alg")
    assert code == 1


def test_require_certified_exits_two(capsys, xyz_file):
    code, out, err = run(
        capsys, "gb", "--input", xyz_file, "--max-deg", "8", "--require-certified"
    )
    assert code == 2
    assert "certified" in err


def test_require_certified_passes_when_certified(capsys, yxsq_file):
    code, out, err = run(
        capsys, "gb", "--input", yxsq_file, "--max-deg", "6", "--require-certified"
    )
    assert code == 0


def test_gldim_require_certified_accepts_certified_dual(capsys, xyz_file):
    code, out, err = run(
        capsys, "gldim", "--input", xyz_file, "--max-deg", "8", "--require-certified"
    )
    assert code == 0


def test_dot_rejected_outside_graph(capsys, xyz_file):
    code, out, err = run(capsys, "gb", "--input", xyz_file, "--format", "dot")
    assert code == 1


def test_text_format(capsys, xyz_file):
    code, out, err = run(
        capsys, "hilbert", "--input", xyz_file, "--max-deg", "4", "--format", "text"
    )
    assert code == 0
    assert "hilbert" in out


def test_field_flag(capsys, xyz_file):
    report = run_json(
        capsys, "betti", "--input", xyz_file, "--max-deg", "5", "--field", "fp:5"
    )
    assert report["payload"]["diagonal"] == [1, 3, 3, 2, 1, 0]


def test_bad_usage_exits_one(capsys):
    assert main(["not-a-command"]) == 1


def test_cubic_koszul_request_exits_one(capsys, tmp_path):
    path = tmp_path / "cubic.alg"
    path.write_text("vars: x > y\nrelations:\n  x*y*x\n")
    code, out, err = run(capsys, "koszul", "--input", str(path))
    assert code == 1
    assert "quadratic" in err


def test_gldim_payload_matches_golden_file(capsys, xyz_file):
    import pathlib

    code, out, err = run(
        capsys, "gldim", "--input", xyz_file, "--max-deg", "8", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)["payload"]
    golden = pathlib.Path(__file__).parent / "golden" / "gldim_xyz_payload.json"
    assert json.dumps(payload, indent=2) + "\n" == golden.read_text()
