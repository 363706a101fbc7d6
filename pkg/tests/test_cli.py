import io
import json

import pytest

from bondcycle.cli import EXIT_CONTRADICTION, EXIT_INFEASIBLE, EXIT_OK, EXIT_USAGE, main


def run(argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


def reports(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def test_petersen_g6():
    assert run(["petersen", "5", "2"]) == (EXIT_OK, "IheA@GUAo\n")


def test_petersen_labels_sidecar(tmp_path):
    path = tmp_path / "labels.json"
    code, _ = run(["petersen", "5", "2", "--format", "edges", "--labels", str(path)])
    labels = json.loads(path.read_text())
    assert code == EXIT_OK
    assert labels["x1"] == 0 and labels["y1"] == 5 and len(labels) == 10


def test_petersen_bad_parameters():
    assert run(["petersen", "4", "2"])[0] == EXIT_USAGE


def test_unknown_command_is_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"], io.StringIO())
    assert info.value.code == EXIT_USAGE


def test_largest_bond_report(tmp_path):
    f = tmp_path / "g.g6"
    f.write_text("IheA@GUAo\n")
    code, text = run(["largest-bond", "--in", str(f)])
    (rep,) = reports(text)
    assert code == EXIT_OK
    assert set(rep) == {"command", "parameters", "graph", "results", "wall_time", "version"}
    assert rep["results"]["bond"]["size"] == 7
    assert rep["graph"] == {"graph6": "IheA@GUAo", "n": 10, "m": 15}


def test_stdin_multiple_graphs(monkeypatch):
    code, text = run(["circumference"], "C~\nDhc\n\n", monkeypatch)
    assert code == EXIT_OK
    assert [r["results"]["circumference"] for r in reports(text)] == [4, 5]


def test_output_is_deterministic_apart_from_wall_time(monkeypatch):
    outs = []
    for _ in range(2):
        _, text = run(["check-conjecture"], "IheA@GUAo\n", monkeypatch)
        rep = reports(text)[0]
        rep.pop("wall_time")
        outs.append(rep)
    assert outs[0] == outs[1]
    assert outs[0]["results"]["verdict"] == "CONSISTENT"


def test_edge_list_input(tmp_path):
    f = tmp_path / "tri.txt"
    f.write_text("n 3\n0 1\n1 2\n0 2\n")
    code, text = run(["cycle-spectrum", "--in", str(f), "--input-format", "edges"])
    assert code == EXIT_OK and reports(text)[0]["results"]["lengths"] == [3]


def test_parse_error_exit(monkeypatch):
    assert run(["largest-bond"], "C~~\n", monkeypatch)[0] == EXIT_USAGE


def test_missing_file_exit(tmp_path):
    assert run(["largest-bond", "--in", str(tmp_path / "nope")])[0] == EXIT_USAGE


def test_size_guard_exit(monkeypatch):
    _, g6 = run(["petersen", "13", "2"])
    assert run(["co-spectrum"], g6, monkeypatch)[0] == EXIT_INFEASIBLE


def test_co_spectrum_and_dual_hamiltonian(monkeypatch):
    _, text = run(["co-spectrum"], "IheA@GUAo\n", monkeypatch)
    assert reports(text)[0]["results"]["sizes"] == [3, 4, 5, 6, 7]
    _, text = run(["dual-hamiltonian"], "IheA@GUAo\n", monkeypatch)
    assert reports(text)[0]["results"]["dual_hamiltonian"] is True


def test_petersen_bond_command():
    code, text = run(["petersen-bond", "20", "4", "--size", "22"])
    rep = reports(text)[0]
    assert code == EXIT_OK
    assert rep["results"]["bond"]["size"] == 22 and rep["results"]["construction"] == "step2"
    assert run(["petersen-bond", "20", "4", "--size", "23"])[0] == EXIT_USAGE


def test_counterexample_verify():
    code, text = run(["counterexample", "--verify", "--subdiv", "5"])
    res = reports(text)[0]["results"]
    assert code == EXIT_OK
    assert res["circumference"] == 18 and res["largest_bond_size"] == 10
    assert res["all_pairs_meet"] is False


def test_check_conjecture_skips_two_connected(monkeypatch):
    _, g6 = run(["counterexample", "--subdiv", "5"])
    _, text = run(["check-conjecture"], g6, monkeypatch)
    assert reports(text)[0]["results"] == {"skipped": "not 3-connected"}
    _, text = run(["check-conjecture", "--include-2-connected"], g6, monkeypatch)
    assert reports(text)[0]["results"]["all_pairs_meet"] is False


def test_dot_command(monkeypatch):
    _, text = run(["dot", "--cycle", "--bond"], "C~\n", monkeypatch)
    assert text.startswith("graph G {") and "bold" in text and "dashed" in text


def test_sweep_with_violations_file(tmp_path):
    path = tmp_path / "viol.g6"
    code, text = run(["sweep", "--n", "5", "--three-connected", "--violations", str(path)])
    rep = reports(text)[0]
    assert code == EXIT_OK
    assert rep["results"]["three_connected_count"] == 26
    assert path.read_text() == ""


def test_sweep_reports_contradiction(monkeypatch):
    import bondcycle.conjecture as mod

    monkeypatch.setattr(mod, "verify_theorem4_scope", lambda r: mod.Verdict.THEOREM_CONTRADICTION)
    code, text = run(["sweep", "--n", "4", "--three-connected"])
    assert code == EXIT_CONTRADICTION
    assert reports(text)[0]["graph6"] == "C~"


def test_verify_paper_single_criterion():
    code, text = run(["verify-paper", "--criterion", "10"])
    rep = reports(text)[0]
    assert code == EXIT_OK and rep["criteria"][0]["passed"] is True
