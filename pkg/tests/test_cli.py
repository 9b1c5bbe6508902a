import json

from w2frob.cli import run_command


def run(capsys, argv):
    code = run_command(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_verify_lemma_spec_example(capsys):
    code, report = run(capsys, ["verify-lemma", "--p", "3", "--n", "2", "--trials", "1000", "--seed", "7"])
    assert code == 0
    assert report["schema"] == 1
    [check] = report["checks"]
    assert check["trials"] == 1000
    assert check["passes"] == 1000


def test_classify_k3(capsys):
    code, report = run(capsys, ["classify", "--json", '{"class":"K3","p":5}'])
    assert code == 0
    assert report["outcome"] == "NotLiftable"
    assert report["citation"]


def test_p1_lift_degree_too_high(capsys):
    code, report = run(capsys, ["p1-lift", "--p", "2", "--f", "x^5"])
    assert code == 1
    assert report["error"] == "DegreeTooHigh"
    assert not report["ok"]


def test_p1_lift_success(capsys):
    code, report = run(capsys, ["p1-lift", "--p", "2", "--f", "x^4"])
    assert code == 0
    assert report["y_correction"] == "1"


def test_witt_check(capsys):
    code, report = run(capsys, ["witt-check", "--p-list", "2,3", "--trials", "50", "--seed", "1"])
    assert code == 0
    assert all(c["ok"] for c in report["checks"])


def test_phi_det_command(capsys):
    code, report = run(capsys, ["phi-det", "--p", "2", "--n", "2", "--trials", "50", "--seed", "3"])
    assert code == 0


def test_ruled_lift_command(capsys):
    code, report = run(capsys, ["ruled-lift", "--base", "P1", "--n", "2", "--p", "3"])
    assert code == 0
    assert report["h"] == "0"
    assert set(report["charts"]) == {"UX", "UT", "VY", "VS"}
    code, report = run(capsys, ["ruled-lift", "--base", "A1", "--b", "x1", "--p", "2"])
    assert code == 0
    assert report["overlaps_implied"] == ["UT/VY", "UT/VS"]


def test_hasse_command(capsys):
    code, report = run(capsys, ["hasse", "--p", "5", "--a", "1", "--b", "0"])
    assert code == 0
    assert report["invariant"] == 2
    assert report["ordinary"] is True


def test_usage_errors_exit_2(capsys):
    assert run_command(["frobnicate"]) == 2
    capsys.readouterr()
    code = run_command(["classify", "--json", "{not json"])
    assert code == 2
    capsys.readouterr()
    code = run_command(["classify", "--json", '{"class":"bogus","p":5}'])
    assert code == 2
    capsys.readouterr()
    code = run_command(["p1-lift", "--p", "2", "--f", "x1^^"])
    assert code == 2


def test_reports_are_deterministic(capsys):
    argv = ["verify-lemma", "--p", "2", "--n", "3", "--trials", "200", "--seed", "11"]
    run_command(argv)
    first = capsys.readouterr().out
    run_command(argv)
    second = capsys.readouterr().out
    assert first == second


def test_env_seed_default(capsys, monkeypatch):
    monkeypatch.setenv("FROBCTL_SEED", "314159")
    code, report = run(capsys, ["witt-check", "--p-list", "2", "--trials", "10"])
    assert code == 0
    assert report["seed"] == 314159


def test_output_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = run_command(["--output", str(target), "verify-lemma", "--p", "2", "--trials", "20", "--seed", "5"])
    capsys.readouterr()
    assert code == 0
    data = json.loads(target.read_text())
    assert data["ok"]
