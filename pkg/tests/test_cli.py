"""
End-to-end tests for the command-line interface
"""

import json

import pytest

from rainbow import __version__
from rainbow.main import EXIT_BUDGET, EXIT_OK, EXIT_REFUTED, EXIT_USAGE, main, parse_int_list, parse_range


def _run_json(capsys, argv):
    code = main(argv + ["--json"])
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


class TestParsers:
    def test_ranges(self):
        assert parse_range("6..9") == [6, 7, 8, 9]
        assert parse_range("2,3") == [2, 3]
        assert parse_range("2..3,7") == [2, 3, 7]

    def test_repeated_values(self):
        assert parse_int_list("3,2,2") == [3, 2, 2]
        assert parse_int_list("2x3,1") == [2, 2, 2, 1]


class TestSolve:
    def test_generate_then_solve_tight_construction(self, tmp_path, capsys):
        path = tmp_path / "f.json"
        code = main(["generate", "--construction", "theorem13-tight", "--n", "4", "--ks", "2,2", "--out", str(path)])
        assert code == EXIT_OK
        capsys.readouterr()

        code, payload = _run_json(capsys, ["solve", "--family", str(path)])
        assert code == EXIT_OK
        assert payload["verdict"] == "no-matching"
        assert payload["witness"] is None
        assert payload["version"] == __version__

    def test_missing_file(self, tmp_path):
        assert main(["solve", "--family", str(tmp_path / "missing.json")]) == EXIT_USAGE

    def test_malformed_family(self, write_family):
        path = write_family({"universe": 4, "families": [{"k": 2, "edges": [[1, 2], [2, 1]]}]})
        assert main(["solve", "--family", str(path)]) == EXIT_USAGE

    @pytest.mark.parametrize("before", [True, False])
    def test_negative_seed_is_a_usage_error(self, write_family, star_pair, before):
        path = str(write_family(star_pair))
        command = ["solve", "--family", path]
        argv = ["--seed", "-1"] + command if before else command + ["--seed", "-1"]
        assert main(argv) == EXIT_USAGE

    def test_negative_seed_from_environment(self, write_family, star_pair, monkeypatch):
        monkeypatch.setenv("RAINBOW_SEED", "-1")
        assert main(["solve", "--family", str(write_family(star_pair))]) == EXIT_USAGE

    @pytest.mark.parametrize("algorithm", ["exact", "brute-force"])
    def test_matching_found(self, write_family, capsys, algorithm):
        path = write_family({"universe": 4, "families": [{"k": 2, "edges": [[1, 2]]}, {"k": 2, "edges": [[3, 4]]}]})
        code, payload = _run_json(capsys, ["solve", "--family", str(path), "--algorithm", algorithm])
        assert code == EXIT_OK
        assert payload["witness"] == [{"family": 1, "edge": [1, 2]}, {"family": 2, "edge": [3, 4]}]

    def test_budget_exit_code(self, tmp_path, capsys):
        path = tmp_path / "k5.json"
        main(["generate", "--construction", "complete", "--n", "5", "--k", "2", "--t", "2", "--out", str(path)])
        capsys.readouterr()
        code, payload = _run_json(capsys, ["solve", "--family", str(path), "--node-budget", "1"])
        assert code == EXIT_BUDGET
        assert payload["verdict"] == "budget-exceeded"

    def test_greedy_writes_trace(self, tmp_path, capsys):
        family = tmp_path / "bip.json"
        trace = tmp_path / "trace.json"
        main(["generate", "--construction", "complete", "--partite", "--n", "4", "--k", "2", "--t", "3", "--out", str(family)])
        capsys.readouterr()
        code, payload = _run_json(capsys, ["solve", "--family", str(family), "--algorithm", "greedy", "--trace", str(trace)])
        assert code == EXIT_OK
        assert len(payload["witness"]) == 3
        assert len(json.loads(trace.read_text())["chosen_vertices"]) == 3

    def test_hypothesis_violation_is_an_input_error(self, tmp_path, capsys):
        family = tmp_path / "small.json"
        main(["generate", "--construction", "partite-threshold", "--n", "3", "--k", "2", "--t", "2", "--out", str(family)])
        capsys.readouterr()
        assert main(["solve", "--family", str(family), "--algorithm", "greedy"]) == EXIT_USAGE

    def test_randomized_needs_t(self, tmp_path, capsys):
        family = tmp_path / "c.json"
        main(["generate", "--construction", "complete", "--partite", "--n", "3", "--k", "2", "--t", "3", "--out", str(family)])
        capsys.readouterr()
        assert main(["solve", "--family", str(family), "--algorithm", "randomized"]) == EXIT_USAGE
        code, payload = _run_json(capsys, ["solve", "--family", str(family), "--algorithm", "randomized", "--t", "2", "--seed", "4"])
        assert code == EXIT_OK
        assert payload["verdict"] == "matching"
        assert payload["seed"] == 4


class TestOtherCommands:
    def test_generate_to_stdout(self, capsys):
        code, payload = _run_json(capsys, ["generate", "--construction", "cover", "--n", "6", "--k", "2", "--t", "3"])
        assert code == EXIT_OK
        assert payload["sizes"] == [9, 9, 9]
        assert len(payload["family"]["families"]) == 3

    def test_generate_rejects_missing_parameters(self):
        assert main(["generate", "--construction", "clique", "--n", "6", "--k", "2"]) == EXIT_USAGE

    def test_verify_lemma21(self, tmp_path, capsys):
        report = tmp_path / "lemma21.jsonl"
        code, payload = _run_json(capsys, [
            "verify", "--target", "lemma21", "--n", "5..6", "--t", "2..3",
            "--trials", "5", "--seed", "1", "--threads", "1", "--report", str(report),
        ])
        assert code == EXIT_OK
        assert payload["ok"]
        assert len(payload["cells"]) == 4
        assert report.exists()

    @pytest.mark.slow
    def test_verify_lemma21_full_grid(self, tmp_path):
        report = tmp_path / "lemma21.jsonl"
        code = main([
            "verify", "--target", "lemma21", "--n", "5..7", "--t", "2..3",
            "--trials", "100", "--seed", "1", "--report", str(report),
        ])
        assert code == EXIT_OK
        assert report.exists()

    @pytest.mark.slow
    def test_verify_theorem12_grid(self):
        code = main([
            "verify", "--target", "theorem12", "--n", "6..9", "--k", "2..3", "--t", "2..3",
            "--trials", "200", "--seed", "7",
        ])
        assert code == EXIT_OK

    def test_verify_budget_exit_code(self, capsys):
        code, payload = _run_json(capsys, [
            "verify", "--target", "oracle", "--n", "6", "--k", "2", "--t", "3",
            "--trials", "20", "--node-budget", "1", "--threads", "1",
        ])
        assert code == EXIT_BUDGET
        assert payload["ok"]
        assert payload["budget_exceeded"] > 0

    @pytest.mark.parametrize("argv", [
        ["search", "--n", "4", "--ks", "2,2", "--seed", "-1"],
        ["generate", "--construction", "random-uniform", "--n", "5", "--ks", "2", "--sizes", "3", "--seed", "-1"],
        ["verify", "--target", "oracle", "--n", "5", "--seed", "-1"],
    ])
    def test_negative_seed_on_other_commands(self, argv):
        assert main(argv) == EXIT_USAGE

    def test_search_budget(self, capsys):
        code, payload = _run_json(capsys, ["search", "--n", "4", "--ks", "2,2", "--budget", "50", "--seed", "1"])
        assert code == EXIT_BUDGET
        assert payload["budget_exhausted"]
        assert payload["verified_no_matching"]
        assert payload["product"] == 9

    def test_nu(self, tmp_path, capsys):
        path = tmp_path / "k5.json"
        main(["generate", "--construction", "complete", "--n", "5", "--k", "2", "--out", str(path)])
        capsys.readouterr()
        code, payload = _run_json(capsys, ["nu", "--family", str(path)])
        assert code == EXIT_OK
        assert payload["members"] == [{"family": 1, "nu": 2}]
        assert main(["nu", "--family", str(path), "--member", "2"]) == EXIT_USAGE

    def test_check_inequality(self, capsys):
        code, payload = _run_json(capsys, ["check-inequality", "--lemma", "3.4", "--n", "100000", "--ks", "2x45000"])
        assert code == EXIT_OK
        assert payload["verdict"] == "holds"
        assert payload["ks"]["sum"] == 90000
        code, payload = _run_json(capsys, ["check-inequality", "--lemma", "3.2", "--n", "1000", "--t", "3", "--k1", "2", "--k2", "2"])
        assert code == EXIT_OK
        assert payload["value"] == pytest.approx(-0.83933, abs=1e-4)

    def test_text_output(self, capsys):
        code = main(["check-inequality", "--lemma", "3.2", "--n", "1000", "--t", "3", "--k1", "2", "--k2", "2"])
        assert code == EXIT_OK
        assert "decreasing_region: True" in capsys.readouterr().out

    def test_usage_errors(self):
        assert main([]) == EXIT_USAGE
        assert main(["verify", "--target", "oracle", "--n", "5..3"]) == EXIT_USAGE
        assert main(["verify", "--target", "nothing", "--n", "5"]) == EXIT_USAGE

    def test_version(self):
        assert main(["--version"]) == EXIT_OK


def test_refuted_exit_code_is_distinct():
    assert len({EXIT_OK, EXIT_REFUTED, EXIT_USAGE, EXIT_BUDGET}) == 4
