"""Command-line exit codes and stream contract: JSON on stdout,
summaries on stderr."""
from __future__ import annotations

import json

import pytest

from golaykit import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


class TestPlan:
    def test_feasible_pair(self, capsys):
        code, obj, err = run_json(
            capsys, "plan", "--alphabet", "binary", "--role", "pair",
            "--shape", "2x10")
        assert code == 0
        assert obj["feasible"] is True
        assert obj["recipe"]["format"] == "gca-recipe/1"
        assert "feasible" in err

    def test_infeasible_exit_2(self, capsys):
        code, obj, err = run_json(
            capsys, "plan", "--alphabet", "quaternary", "--role", "pair",
            "--shape", "18x5")
        assert code == 2
        assert obj["feasible"] is False
        assert "glued factor 10" in obj["reason"]

    def test_nonexistent_flagged(self, capsys):
        code, obj, _ = run_json(
            capsys, "plan", "--alphabet", "binary", "--role", "pair",
            "--shape", "2x5")
        assert code == 2
        assert obj["known_nonexistent"] is True

    def test_writes_recipe_file(self, capsys, tmp_path):
        out = tmp_path / "recipe.json"
        code, _, _ = run(
            capsys, "plan", "--alphabet", "quaternary", "--role", "quad",
            "--shape", "3x3", "--out", str(out))
        assert code == 0
        assert json.loads(out.read_text())["format"] == "gca-recipe/1"


class TestGenerateVerifyRoundTrip:
    def test_full_pipeline(self, capsys, tmp_path):
        recipe = tmp_path / "recipe.json"
        out_set = tmp_path / "set.json"
        assert run(capsys, "plan", "--alphabet", "quaternary", "--role",
                   "pair", "--shape", "9x10", "--out", str(recipe))[0] == 0
        code, _, err = run(capsys, "generate", "--recipe", str(recipe),
                           "--out", str(out_set))
        assert code == 0
        assert "total weight 180" in err
        code, obj, _ = run_json(capsys, "verify", str(out_set))
        assert code == 0
        assert obj["complementary"] is True
        assert obj["polynomial_route"] is True
        assert obj["max_sidelobe_norm"] == 0
        assert obj["spectrum_deviation"] < 1e-9

    def test_generate_from_plan_args(self, capsys):
        code, obj, _ = run_json(
            capsys, "generate", "--alphabet", "quaternary", "--role", "quad",
            "--shape", "3x3")
        assert code == 0
        assert obj["format"] == "gca-set/1"
        assert len(obj["arrays"]) == 4

    def test_generate_infeasible(self, capsys):
        code, obj, _ = run_json(
            capsys, "generate", "--alphabet", "quaternary", "--role", "pair",
            "--shape", "18x5")
        assert code == 2

    def test_missing_seed_exit_3(self, capsys, tmp_path):
        empty = tmp_path / "none.json"
        empty.write_text("[]")
        code, _, err = run(
            capsys, "generate", "--alphabet", "binary", "--role", "pair",
            "--shape", "2x10", "--seeds", str(empty))
        assert code == 3
        assert "seed not in registry" in err

    def test_bad_recipe_exit_65(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"format": "bogus/9", "op": "seed"}')
        assert run(capsys, "generate", "--recipe", str(bad))[0] == 65


class TestVerifyFailures:
    def _write_set(self, capsys, tmp_path):
        out_set = tmp_path / "set.json"
        run(capsys, "generate", "--alphabet", "binary", "--role", "pair",
            "--shape", "10", "--out", str(out_set))
        return out_set

    def test_perturbed_entry_exit_4(self, capsys, tmp_path):
        path = self._write_set(capsys, tmp_path)
        doc = json.loads(path.read_text())
        ent = doc["arrays"][0]["entries"]
        ent[0] = [-ent[0][0], -ent[0][1]]
        path.write_text(json.dumps(doc))
        code, obj, err = run_json(capsys, "verify", str(path))
        assert code == 4
        assert obj["complementary"] is False
        assert "NOT complementary" in err

    def test_unreadable_exit_65(self, capsys, tmp_path):
        missing = tmp_path / "missing.json"
        assert run(capsys, "verify", str(missing))[0] == 65
        garbage = tmp_path / "garbage.json"
        garbage.write_text("not json")
        assert run(capsys, "verify", str(garbage))[0] == 65

    def test_empty_set_exit_65(self, capsys, tmp_path):
        empty = tmp_path / "empty.json"
        empty.write_text(json.dumps(
            {"format": "gca-set/1", "alphabet": "binary", "arrays": []}))
        assert run(capsys, "verify", str(empty))[0] == 65

    def test_spectrum_diagnostic(self, capsys, tmp_path):
        path = self._write_set(capsys, tmp_path)
        code, obj, _ = run_json(capsys, "spectrum", str(path), "--grid", "8")
        assert code == 0
        assert obj["spectrum_deviation"] < 1e-9
        assert obj["grid"] == 8


class TestSeedSearch:
    def test_found_exit_0(self, capsys):
        code, obj, _ = run_json(
            capsys, "seed", "search", "--kind", "pair", "--alphabet",
            "binary", "--shape", "10")
        assert code == 0
        assert obj["status"] == "found"
        assert obj["record"]["kind"] == "golay-pair"

    def test_exhausted_exit_1(self, capsys):
        code, obj, _ = run_json(
            capsys, "seed", "search", "--kind", "pair", "--alphabet",
            "binary", "--shape", "5")
        assert code == 1
        assert obj["status"] == "exhausted"
        assert obj["record"] is None

    def test_budget_exit_5(self, capsys):
        code, obj, _ = run_json(
            capsys, "seed", "search", "--kind", "base", "--m", "6",
            "--budget", "10")
        assert code == 5
        assert obj["status"] == "budget-exceeded"

    def test_base_found(self, capsys):
        code, obj, _ = run_json(
            capsys, "seed", "search", "--kind", "base", "--m", "2")
        assert code == 0
        assert obj["record"]["kind"] == "base-sequences"


class TestCoverage:
    def test_golay_count(self, capsys):
        code, obj, _ = run_json(
            capsys, "coverage", "--kind", "golay-count", "--alphabet",
            "binary", "--limit", "100")
        assert code == 0
        assert obj["count"] == 14

    def test_quad_sum_gaps(self, capsys):
        code, obj, err = run_json(
            capsys, "coverage", "--kind", "quad-sum-coverage",
            "--limit", "1000")
        assert code == 0
        assert obj["uncovered"] == [799, 959]
        assert "799" in err


class TestUsageErrors:
    @pytest.mark.parametrize("argv", [
        (),
        ("frobnicate",),
        ("plan", "--alphabet", "binary", "--role", "pair"),
        ("plan", "--alphabet", "binary", "--role", "pair", "--shape", "9xx"),
        ("plan", "--alphabet", "binary", "--role", "pair", "--shape", "0x4"),
        ("generate", "--role", "pair", "--shape", "4"),
        ("coverage", "--kind", "golay-count", "--limit", "10"),
        ("seed", "search", "--kind", "pair"),
        ("seed", "search", "--kind", "base"),
    ])
    def test_exit_64(self, capsys, argv):
        assert run(capsys, *argv)[0] == 64

    def test_stdout_stays_machine_readable(self, capsys):
        # human text goes to stderr even on failure paths
        code, out, err = run(capsys, "plan", "--alphabet", "quaternary",
                             "--role", "pair", "--shape", "18x5")
        json.loads(out)
        assert err.strip()
