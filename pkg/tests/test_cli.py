import subprocess
import sys

import pytest

from cyclemesh.cli import main, render_report
from cyclemesh.counting import CheckResult, VerificationReport, a2_series


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestFoataCommand:
    def test_forward(self, capsys):
        assert run_cli(capsys, "foata", "213967548") == (0, "567498312\n", "")

    def test_inverse(self, capsys):
        assert run_cli(capsys, "foata", "--inverse", "567498312") == (0, "213967548\n", "")

    def test_empty(self, capsys):
        assert run_cli(capsys, "foata", "") == (0, "\n", "")

    def test_parse_failure_exits_2(self, capsys):
        code, out, err = run_cli(capsys, "foata", "2x1")
        assert code == 2
        assert out == ""
        assert "bad permutation text" in err


class TestMeshCommand:
    def test_count(self, capsys):
        assert run_cli(capsys, "mesh", "count", "--pattern", "s:3", "567498312") == (0, "1\n", "")

    def test_count_empty_host(self, capsys):
        assert run_cli(capsys, "mesh", "count", "--pattern", "r:1", "") == (0, "0\n", "")

    def test_occurrences(self, capsys):
        code, out, err = run_cli(capsys, "mesh", "occurrences", "--pattern", "s:1", "321")
        assert (code, err) == (0, "")
        assert out == "1,2\n2,3\n"

    def test_avoiders_count(self, capsys):
        assert run_cli(capsys, "mesh", "avoiders", "--pattern", "p", "--n", "3") == (0, "5\n", "")

    def test_avoiders_list(self, capsys):
        code, out, err = run_cli(capsys, "mesh", "avoiders", "--pattern", "p", "--n", "3", "--list")
        assert (code, err) == (0, "")
        assert out == "123\n213\n231\n312\n321\n"

    def test_bad_pattern_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "mesh", "count", "--pattern", "zz", "321")
        assert code == 2
        assert "unknown pattern name" in err

    def test_avoiders_over_bound_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "mesh", "avoiders", "--pattern", "p", "--n", "11")
        assert code == 2
        assert "brute-force bound" in err


class TestSeriesCommand:
    def test_a2(self, capsys):
        assert run_cli(capsys, "series", "a2", "--terms", "3") == (
            0,
            "0\t1\n1\t1\n2\t1\n3\t4\n",
            "",
        )

    def test_f(self, capsys):
        assert run_cli(capsys, "series", "f", "--terms", "2") == (0, "0\t1\n1\t1\n2\t2\n", "")

    def test_a2_zero_terms(self, capsys):
        assert run_cli(capsys, "series", "a2", "--terms", "0") == (0, "0\t1\n", "")

    def test_avoiders_p(self, capsys):
        code, out, _ = run_cli(capsys, "series", "avoiders-p", "--terms", "4")
        assert code == 0
        assert out == "0\t1\n1\t1\n2\t2\n3\t5\n4\t20\n"

    def test_negative_terms_usage_error(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["series", "a2", "--terms", "-3"])
        assert excinfo.value.code == 2

    def test_avoiders_p_over_bound_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "series", "avoiders-p", "--terms", "12")
        assert code == 2
        assert "brute-force bound" in err


class TestVerifyCommand:
    def test_theorem1_passes(self, capsys):
        code, out, err = run_cli(capsys, "verify", "theorem1", "--max-n", "4")
        assert (code, err) == (0, "")
        assert out == (
            "verify theorem1 (n <= 4)\n"
            "  [PASS] adjacent q-cycle count equals r_q + s_q occurrences: "
            "34 permutations, 119 (pi, q) cases\n"
            "PASS\n"
        )

    def test_conjecture_passes(self, capsys):
        code, out, err = run_cli(capsys, "verify", "conjecture", "--max-n", "3", "--series-terms", "20")
        assert (code, err) == (0, "")
        assert out.endswith("PASS\n")
        assert out.count("[PASS]") == 5

    def test_negative_max_n_usage_error(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["verify", "theorem1", "--max-n", "-1"])
        assert excinfo.value.code == 2

    def test_unknown_target_usage_error(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["verify", "lemma2", "--max-n", "3"])
        assert excinfo.value.code == 2

    def test_failing_report_renders_counterexample_and_exits_1(self, capsys, monkeypatch):
        from cyclemesh import cli

        report = VerificationReport(
            title="theorem1 (n <= 2)",
            checks=(
                CheckResult(
                    name="adjacent q-cycle count equals r_q + s_q occurrences",
                    passed=False,
                    scanned=4,
                    detail="4 permutations, 5 (pi, q) cases",
                    counterexample={"pi": "21", "q": "2"},
                ),
            ),
        )
        monkeypatch.setattr(cli.counting, "verify_theorem1", lambda n: report)
        code, out, _ = run_cli(capsys, "verify", "theorem1", "--max-n", "2")
        assert code == 1
        assert "[FAIL]" in out
        assert "counterexample: pi=21 q=2" in out
        assert out.endswith("FAIL\n")


class TestOeisDiffCommand:
    @pytest.fixture
    def a2_bfile(self, tmp_path):
        coeffs = a2_series(50).coeffs
        path = tmp_path / "b177249.txt"
        lines = ["# a2 fixture"] + [f"{i} {c}" for i, c in enumerate(coeffs)]
        path.write_text("\n".join(lines) + "\n")
        return path

    def test_match(self, capsys, a2_bfile):
        code, out, err = run_cli(capsys, "oeis-diff", str(a2_bfile), "--series", "a2", "--terms", "50")
        assert (code, out, err) == (0, "MATCH over [0,50]\n", "")

    def test_mismatch_names_index(self, capsys, tmp_path):
        coeffs = list(a2_series(30).coeffs)
        coeffs[17] += 1
        path = tmp_path / "b.txt"
        path.write_text("\n".join(f"{i} {c}" for i, c in enumerate(coeffs)) + "\n")
        code, out, _ = run_cli(capsys, "oeis-diff", str(path), "--series", "a2", "--terms", "30")
        assert code == 1
        assert out.startswith("MISMATCH at index 17:")

    def test_no_overlap_exits_2(self, capsys, tmp_path):
        path = tmp_path / "b.txt"
        path.write_text("60 1\n61 2\n")
        code, _, err = run_cli(capsys, "oeis-diff", str(path), "--terms", "50")
        assert code == 2
        assert "no overlapping range" in err

    def test_unreadable_file_exits_2(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "oeis-diff", str(tmp_path / "missing.txt"))
        assert code == 2
        assert "error:" in err

    def test_malformed_line_exits_2(self, capsys, tmp_path):
        path = tmp_path / "b.txt"
        path.write_text("0 1\nbogus\n")
        code, _, err = run_cli(capsys, "oeis-diff", str(path))
        assert code == 2
        assert "line 2" in err


def test_render_report_all_pass_round_trip():
    report = VerificationReport(
        title="demo", checks=(CheckResult(name="x", passed=True, scanned=1, detail="1 case"),)
    )
    text = render_report(report)
    assert text.splitlines()[-1] == "PASS"


def test_module_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "cyclemesh", "foata", "213967548"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "567498312\n"
