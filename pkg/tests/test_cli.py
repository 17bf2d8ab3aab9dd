import json
import os

import pytest

from circulant_coloring.cli import (
    EXIT_BUDGET,
    EXIT_OK,
    EXIT_PRECONDITION,
    EXIT_VERIFICATION,
    main,
)
from circulant_coloring.coloring import read_coloring_json, write_matrix_csv
from circulant_coloring.constructions import color_power_cycle_even


class TestBuild:
    def test_normalizes_and_prints(self, capsys):
        assert main(["build", "--n", "24",
                     "--gens", "1,3,4,5,10,14"]) == EXIT_OK
        out = json.loads(capsys.readouterr().out)
        assert out == {"generators": [1, 3, 4, 5, 10], "n": 24}

    def test_bad_gens(self, capsys):
        assert main(["build", "--n", "10", "--gens", "1,x"]) == EXIT_PRECONDITION


class TestColor:
    def test_csv_to_stdout(self, capsys):
        assert main(["color", "--method", "thm21-even",
                     "--n", "18", "--k", "4", "--i", "5"]) == EXIT_OK
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "," + ",".join(str(v) for v in range(18))
        assert lines[-1].startswith("# ")
        report = json.loads(lines[-1][2:])
        assert report["colors_used"] == 9

    def test_json_to_stdout(self, capsys):
        assert main(["color", "--method", "thm21-odd", "--format", "json",
                     "--n", "9", "--k", "1", "--i", "2"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["n"] == 9
        assert payload["report"]["colors_used"] == 3

    def test_out_files(self, tmp_path, capsys):
        prefix = str(tmp_path / "run")
        assert main(["color", "--method", "thm21-even", "--n", "18",
                     "--k", "4", "--i", "5", "--out", prefix]) == EXIT_OK
        assert (tmp_path / "run.csv").is_file()
        assert (tmp_path / "run.json").is_file()
        report = json.loads((tmp_path / "run.report.json").read_text())
        assert report["bound_claimed"] == 9
        tc = read_coloring_json(tmp_path / "run.json")
        assert tc == color_power_cycle_even(18, 4, 5).coloring

    def test_two_output_methods(self, tmp_path, capsys):
        prefix = str(tmp_path / "pair")
        assert main(["color", "--method", "thm22", "--n", "18",
                     "--k", "4", "--out", prefix]) == EXIT_OK
        for suffix in ("-equitable", "-nsd"):
            for ext in (".csv", ".json", ".report.json"):
                assert (tmp_path / ("pair%s%s" % (suffix, ext))).is_file()

    def test_precondition_exit(self, capsys):
        assert main(["color", "--method", "thm21-even",
                     "--n", "9", "--k", "1", "--i", "2"]) == EXIT_PRECONDITION
        assert "precondition" in capsys.readouterr().err

    def test_missing_gens(self, capsys):
        assert main(["color", "--method", "thm32",
                     "--n", "24"]) == EXIT_PRECONDITION

    def test_budget_exit(self, capsys):
        code = main(["--budget", "10", "color", "--method", "thm31",
                     "--n", "20", "--gens", "1,2,3,4,5,7,8"])
        os.environ.pop("TC_BUDGET", None)
        assert code == EXIT_BUDGET

    def test_thm34(self, capsys):
        assert main(["color", "--method", "thm34", "--format", "json",
                     "--n", "18", "--gens", "1,2,4,6,7,8",
                     "--s1-gens", "1,2,4,6"]) == EXIT_OK


class TestVerify:
    def _write_good(self, tmp_path):
        tc = color_power_cycle_even(18, 4, 5).coloring
        path = tmp_path / "good.csv"
        write_matrix_csv(tc, path)
        return tc, str(path)

    def test_ok(self, tmp_path, capsys):
        _, path = self._write_good(tmp_path)
        assert main(["verify", "--n", "18", "--gens", "1,2,3,4",
                     "--in", path]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["proper"] is True

    def test_equitable_flag(self, tmp_path, capsys):
        _, path = self._write_good(tmp_path)
        assert main(["verify", "--n", "18", "--gens", "1,2,3,4",
                     "--in", path, "--equitable"]) == EXIT_OK

    def test_corrupted_rejected(self, tmp_path, capsys):
        tc, _ = self._write_good(tmp_path)
        e = next(iter(tc.edge_colors))
        bad = tc.with_edge_colors({e: tc.vertex_colors[e.u]})
        path = tmp_path / "bad.csv"
        write_matrix_csv(bad, path)
        assert main(["verify", "--n", "18", "--gens", "1,2,3,4",
                     "--in", str(path)]) == EXIT_VERIFICATION
        report = json.loads(capsys.readouterr().out)
        assert report["violations"]

    def test_nsd_flag(self, tmp_path, capsys):
        _, path = self._write_good(tmp_path)
        # the plain equitable coloring is not sum-distinguishing
        assert main(["verify", "--n", "18", "--gens", "1,2,3,4",
                     "--in", path, "--nsd"]) == EXIT_VERIFICATION


class TestOracle:
    def test_total_chromatic(self, capsys):
        assert main(["oracle", "--quantity", "total-chromatic",
                     "--n", "6", "--gens", "1"]) == EXIT_OK
        out = json.loads(capsys.readouterr().out)
        assert out["value"] == 3

    def test_feasibility(self, capsys):
        assert main(["oracle", "--quantity", "nsd-feasible",
                     "--n", "6", "--gens", "1", "--k", "4"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["value"] is True


class TestExport:
    def test_round_trip_byte_identical(self, tmp_path, capsys):
        tc = color_power_cycle_even(18, 4, 5).coloring
        a = tmp_path / "a.csv"
        write_matrix_csv(tc, a)
        j = tmp_path / "b.json"
        assert main(["export", "--in", str(a), "--format", "json",
                     "--out", str(j)]) == EXIT_OK
        c = tmp_path / "c.csv"
        assert main(["export", "--in", str(j), "--format", "csv",
                     "--out", str(c)]) == EXIT_OK
        assert a.read_bytes() == c.read_bytes()

    def test_wildcards_refused(self, tmp_path, capsys):
        path = tmp_path / "w.csv"
        path.write_text(",0,1\n0,1,*\n1,*,2\n")
        assert main(["verify", "--n", "3", "--gens", "1",
                     "--in", str(path)]) == EXIT_PRECONDITION


class TestReproduce:
    def test_single_table(self, capsys):
        assert main(["reproduce", "--table", "2"]) == EXIT_OK
        assert "table 2: OK" in capsys.readouterr().out

    def test_all(self, capsys):
        assert main(["reproduce"]) == EXIT_OK
        out = capsys.readouterr().out
        for tid in range(1, 7):
            assert ("table %d: OK" % tid) in out


class TestDeterminism:
    def test_repeat_color_runs_identical(self, capsys):
        main(["color", "--method", "thm34", "--format", "json",
              "--n", "18", "--gens", "1,2,4,6,7,8", "--s1-gens", "1,2,4,6"])
        first = capsys.readouterr().out
        main(["color", "--method", "thm34", "--format", "json",
              "--n", "18", "--gens", "1,2,4,6,7,8", "--s1-gens", "1,2,4,6"])
        assert capsys.readouterr().out == first
