import json

import pytest

from hwfib.cli import main
from hwfib.hwgroup import candidate_to_json_dict, cyclic_hw


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_candidate(tmp_path, candidate, name="candidate.json"):
    path = tmp_path / name
    path.write_text(json.dumps(candidate_to_json_dict(candidate)))
    return str(path)


def test_verify_cyclic3_passes(tmp_path, capsys):
    path = write_candidate(tmp_path, cyclic_hw(3))
    code, out, _ = run_cli(capsys, "verify", "--input", path)
    assert code == 0
    assert "verdict: PASS" in out


def test_verify_json_report_shape(tmp_path, capsys):
    path = write_candidate(tmp_path, cyclic_hw(3))
    code, out, _ = run_cli(capsys, "verify", "--input", path, "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["verdict"] == "pass"
    assert report["surjective"] is True
    assert report["relators"][0] == {"index": 0, "trivial": True}
    assert report["candidate"]["dim"] == 3


def test_verify_zero_translation_fails_with_torsion_note(tmp_path, capsys):
    path = tmp_path / "zero.json"
    path.write_text(json.dumps({"dim": 3, "translations": [["0", "0", "0"], ["0", "0", "0"]]}))
    code, out, _ = run_cli(capsys, "verify", "--input", str(path))
    assert code == 1
    assert "not torsion-free" in out


def test_verify_even_dimension_usage_error(tmp_path, capsys):
    path = tmp_path / "even.json"
    path.write_text(
        json.dumps({"dim": 4, "translations": [["0"] * 4, ["0"] * 4, ["0"] * 4]})
    )
    code, _, err = run_cli(capsys, "verify", "--input", str(path))
    assert code == 2
    assert "odd" in err


def test_verify_malformed_json(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, _, err = run_cli(capsys, "verify", "--input", str(path))
    assert code == 2
    assert "cannot load" in err


def test_verify_non_half_integer(tmp_path, capsys):
    path = tmp_path / "third.json"
    path.write_text(
        json.dumps({"dim": 3, "translations": [["1/3", "0", "0"], ["0", "0", "0"]]})
    )
    code, _, err = run_cli(capsys, "verify", "--input", str(path))
    assert code == 2


def test_survey_dim3_full(capsys):
    code, out, _ = run_cli(capsys, "survey", "--dim", "3", "--format", "json")
    assert code == 0
    lines = out.strip().splitlines()
    records = [json.loads(line) for line in lines]
    summary = records[-1]
    assert summary.get("summary") is True
    body = records[:-1]
    assert len(body) == 64
    assert summary["hantzsche_wendt"] == sum(r["hw"] for r in body)
    assert summary["verified_fail"] == 0
    for r in body:
        if r["hw"]:
            assert r["verdict"] == "pass"
        else:
            assert r["verdict"] is None


def test_survey_sample_deterministic(capsys):
    args = ["survey", "--dim", "5", "--sample", "40", "--seed", "42", "--format", "json"]
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    assert len(out1.strip().splitlines()) == 41  # 40 records + summary
    _, out3, _ = run_cli(capsys, "survey", "--dim", "5", "--sample", "40", "--seed", "1", "--format", "json")
    assert out3 != out1


def test_survey_jobs_matches_serial(capsys):
    base = ["survey", "--dim", "3", "--format", "json"]
    _, serial, _ = run_cli(capsys, *base)
    _, parallel, _ = run_cli(capsys, *base, "--jobs", "2")
    assert serial == parallel


def test_survey_large_dim_requires_sample(capsys):
    code, _, err = run_cli(capsys, "survey", "--dim", "7")
    assert code == 2
    assert "--sample" in err


def test_survey_even_dim_rejected(capsys):
    code, _, err = run_cli(capsys, "survey", "--dim", "4", "--sample", "10")
    assert code == 2


def test_symbolic_dim3_text(capsys):
    code, out, _ = run_cli(capsys, "symbolic", "--dim", "3")
    assert code == 0
    assert "period 6 confirmed for k=0,1,2" in out
    assert "runtime" in out


def test_symbolic_single_k_prints_terms(capsys):
    code, out, _ = run_cli(capsys, "symbolic", "--dim", "3", "--k", "0")
    assert code == 0
    assert "term 0: (+1, d0)" in out
    assert "term 2: (-1, d0 + d1)" in out


def test_symbolic_json_deterministic(capsys):
    args = ["symbolic", "--dim", "5", "--format", "json"]
    code, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert code == 0
    assert out1 == out2
    data = json.loads(out1)
    assert data["verdict"] == "pass"
    assert len(data["checks"]) == 5
    assert all(c["periodic"] and c["recursion_consistent"] for c in data["checks"])


def test_symbolic_k_out_of_range(capsys):
    code, _, err = run_cli(capsys, "symbolic", "--dim", "3", "--k", "5")
    assert code == 2
    assert "--k" in err


def test_symbolic_dim13_confirms_and_reports_runtime(capsys):
    code, out, _ = run_cli(capsys, "symbolic", "--dim", "13")
    assert code == 0
    assert "period 26 confirmed" in out
    assert "runtime:" in out


def test_verify_json_byte_identical(tmp_path, capsys):
    path = write_candidate(tmp_path, cyclic_hw(5))
    args = ["verify", "--input", path, "--format", "json"]
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_abelianize_f26(capsys):
    code, out, _ = run_cli(capsys, "abelianize", "2", "6", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["divisors"] == [1, 1, 1, 1, 4, 4]
    assert data["nontrivial"] == [4, 4]
    assert data["order"] == 16
    assert data["even_divisors"] == 2
    assert data["holonomy_rank"] == 2


def test_abelianize_f4_10(capsys):
    code, out, _ = run_cli(capsys, "abelianize", "4", "10", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["even_divisors"] >= 4
    assert data["holonomy_rank"] == 4


def test_abelianize_degenerate(capsys):
    code, out, _ = run_cli(capsys, "abelianize", "1", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["divisors"] == [0]
    assert data["free_rank"] == 1
    assert data["order"] is None


def test_show_builtin_cyclic(capsys):
    code, out, _ = run_cli(capsys, "show", "--dim", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["classification"]["hantzsche_wendt"] is True
    assert data["holonomy_order"] == 4
    assert data["lattice"]["rank"] == 3


def test_show_text(tmp_path, capsys):
    path = write_candidate(tmp_path, cyclic_hw(3))
    code, out, _ = run_cli(capsys, "show", "--input", path)
    assert code == 0
    assert "generator 0" in out
    assert "hantzsche-wendt=yes" in out


def test_show_needs_source(capsys):
    code, _, err = run_cli(capsys, "show")
    assert code == 2


def test_unknown_command_exits_2(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["frobnicate"])
    assert excinfo.value.code == 2
