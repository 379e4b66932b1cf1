"""End-to-end command-line behavior, including exit codes."""

import io
import json

import pytest

from hankelrev import Check, ConjectureReport, FAMILY_C, FamilyParams, SweepResult
from hankelrev import cli
from hankelrev.cli import run

WORKED_TABLE = (
    "n,h,h_star,h_star_star\n"
    "0,0,1,-3\n"
    "1,-1,-5,-70\n"
    "2,-15,-125,7125\n"
    "3,1750,15625,3765625\n"
    "4,890625,9765625,-9843750000\n"
    "5,-2353515625,-30517578125,-129058837890625\n"
)


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExpand:
    def test_gf_csv(self, capsys):
        code, out, _ = invoke(
            capsys, "expand", "--gf", "x/(1-3*x-5*x^2)", "--order", "5",
            "--format", "csv",
        )
        assert code == 0
        assert out == "0,1,3,14,57,241\n"

    def test_family_csv(self, capsys):
        code, out, _ = invoke(
            capsys, "expand", "--family", "A", "--alpha=-3", "--beta=-5",
            "--order", "5", "--format", "csv",
        )
        assert code == 0
        assert out == "0,1,3,14,57,241\n"

    def test_json(self, capsys):
        code, out, _ = invoke(
            capsys, "expand", "--gf", "1/(1-x)", "--order", "3", "--format", "json",
        )
        assert code == 0
        assert json.loads(out) == ["1", "1", "1", "1"]

    def test_table(self, capsys):
        code, out, _ = invoke(capsys, "expand", "--gf", "1/(1-x)", "--order", "2")
        assert code == 0
        assert out == "n  value\n0  1\n1  1\n2  1\n"

    def test_requires_exactly_one_source(self, capsys):
        code, _, err = invoke(
            capsys, "expand", "--gf", "x", "--family", "A", "--alpha", "1",
            "--order", "3",
        )
        assert code == 2
        assert "error: provide exactly one of --gf, --family" in err

    def test_gf_syntax_error_exits_2(self, capsys):
        code, _, err = invoke(capsys, "expand", "--gf", "x^", "--order", "3")
        assert code == 2
        assert "syntax error at offset 2" in err


class TestRevert:
    def test_gf(self, capsys):
        code, out, _ = invoke(
            capsys, "revert", "--gf", "x/(1-3*x-5*x^2)", "--order", "5",
            "--format", "csv",
        )
        assert code == 0
        assert out == "0,1,-3,4,18,-139\n"

    def test_family(self, capsys):
        code, out, _ = invoke(
            capsys, "revert", "--family", "C", "--alpha", "2", "--order", "5",
            "--format", "csv",
        )
        assert code == 0
        assert out == "0,1,2,8,40,224\n"

    def test_non_reversible_input_exits_2(self, capsys):
        code, _, err = invoke(
            capsys, "revert", "--gf", "1+x", "--order", "4", "--format", "csv",
        )
        assert code == 2
        assert "error: series not reversible" in err


class TestHankel:
    def test_explicit_depth(self, capsys):
        code, out, _ = invoke(
            capsys, "hankel", "--seq", "1,1,2,5,14,42,132", "--depth", "2",
            "--format", "csv",
        )
        assert code == 0
        assert out == "1,1,1\n"

    def test_depth_defaults_to_deepest_available(self, capsys):
        code, out, _ = invoke(
            capsys, "hankel", "--seq", "1,2,6,20,70,252,924", "--format", "csv",
        )
        assert code == 0
        assert out == "1,2,4,8\n"

    def test_reads_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("0,1,-3,4,18"))
        code, out, _ = invoke(capsys, "hankel", "--seq", "-", "--format", "csv")
        assert code == 0
        assert out == "0,-1,-15\n"

    def test_invalid_entry_exits_2(self, capsys):
        code, _, err = invoke(capsys, "hankel", "--seq", "1,x,3", "--format", "csv")
        assert code == 2
        assert "error: invalid sequence entry 'x'" in err

    def test_too_few_terms_exits_2(self, capsys):
        code, _, err = invoke(
            capsys, "hankel", "--seq", "1,2,3", "--depth", "4", "--format", "csv",
        )
        assert code == 2
        assert "needs at least 9 terms, got 3" in err


class TestTriple:
    def test_family_worked_example(self, capsys):
        code, out, _ = invoke(
            capsys, "triple", "--family", "A", "--alpha=-3", "--beta=-5",
            "--depth", "5", "--format", "csv",
        )
        assert code == 0
        assert out == WORKED_TABLE

    def test_sequence_input(self, capsys):
        code, out, _ = invoke(
            capsys, "triple", "--seq", "0,1,1,2,5,14,42,132,429", "--format", "csv",
        )
        assert code == 0
        assert out == (
            "n,h,h_star,h_star_star\n"
            "0,0,1,1\n"
            "1,-1,1,1\n"
            "2,-2,1,1\n"
            "3,-3,1,1\n"
        )


class TestBinomial:
    def test_forward(self, capsys):
        code, out, _ = invoke(capsys, "binomial", "--seq", "1,1,1,1", "--format", "csv")
        assert code == 0
        assert out == "1,2,4,8\n"

    def test_inverse(self, capsys):
        code, out, _ = invoke(
            capsys, "binomial", "--seq", "1,2,4,8", "--inverse", "--format", "csv",
        )
        assert code == 0
        assert out == "1,1,1,1\n"


class TestVerify:
    def test_json_report(self, capsys):
        code, out, _ = invoke(
            capsys, "verify", "--conjecture", "4", "--alpha=-3", "--beta=-5",
            "--depth", "5", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["conjecture"] == "4"
        assert payload["all_pass"] is True
        assert payload["alpha"] == "-3"

    def test_table_verdict(self, capsys):
        code, out, _ = invoke(
            capsys, "verify", "--conjecture", "8", "--alpha", "2", "--depth", "1",
        )
        assert code == 0
        assert out.splitlines()[-1] == "all checks passed (8/8)"

    def test_anchors_note_shown(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--conjecture", "anchors", "--depth", "2")
        assert code == 0
        assert "note: the transform of the head-zeroed Catalan sequence" in out

    def test_counterexample_exits_1(self, capsys, monkeypatch):
        failing = ConjectureReport(
            conjecture_id="8",
            params=FamilyParams(2, 0, FAMILY_C),
            depth=1,
            checks=(Check(0, "demo claim", "1", "2", False),),
            all_pass=False,
        )
        monkeypatch.setattr(cli, "verify_conjecture8", lambda a, d: failing)
        code, out, _ = invoke(
            capsys, "verify", "--conjecture", "8", "--alpha", "2", "--depth", "1",
        )
        assert code == 1
        assert "FAIL" in out
        assert out.splitlines()[-1] == "CHECKS FAILED (0/1)"

    def test_precondition_violation_exits_2(self, capsys):
        code, _, err = invoke(
            capsys, "verify", "--conjecture", "4", "--alpha", "1", "--beta", "0",
            "--depth", "3",
        )
        assert code == 2
        assert "error: beta must be nonzero" in err

    def test_missing_parameter_exits_2(self, capsys):
        code, _, err = invoke(capsys, "verify", "--conjecture", "4", "--alpha", "1")
        assert code == 2
        assert "error: conjecture 4 needs --beta" in err

    def test_unknown_conjecture_exits_2(self, capsys):
        code, _, err = invoke(capsys, "verify", "--conjecture", "5", "--alpha", "1")
        assert code == 2
        assert "invalid choice" in err


class TestSweep:
    def test_csv(self, capsys):
        code, out, _ = invoke(
            capsys, "sweep", "--conjecture", "8", "--alpha-range=-2:2",
            "--depth", "2", "--format", "csv",
        )
        assert code == 0
        assert out == (
            "conjecture,alpha,beta,depth,status\n"
            "8,-2,0,2,pass\n"
            "8,-1,0,2,pass\n"
            "8,0,0,2,skipped\n"
            "8,1,0,2,pass\n"
            "8,2,0,2,pass\n"
        )

    def test_json_counts(self, capsys):
        code, out, _ = invoke(
            capsys, "sweep", "--conjecture", "4", "--alpha-range=-1:1",
            "--beta-range=-1:1", "--depth", "2", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["grid_points"] == "9"
        assert payload["checked"] == "6"
        assert payload["all_pass"] is True

    def test_table_summary(self, capsys):
        code, out, _ = invoke(
            capsys, "sweep", "--conjecture", "8", "--alpha-range=-2:2", "--depth", "2",
        )
        assert code == 0
        assert out == (
            "conjecture 8: depth=2 grid=5 checked=4 skipped=1 counterexamples=0\n"
            "no counterexamples\n"
        )

    def test_counterexample_exits_1(self, capsys, monkeypatch):
        point = FamilyParams(1, 0, FAMILY_C)
        failing = ConjectureReport(
            conjecture_id="8",
            params=point,
            depth=1,
            checks=(Check(0, "demo claim", "1", "2", False),),
            all_pass=False,
        )
        result = SweepResult(
            conjecture_id="8",
            depth=1,
            grid=(point,),
            reports=(failing,),
            counterexamples=(failing,),
            skipped=(),
        )
        monkeypatch.setattr(cli, "sweep", lambda *a, **k: result)
        code, out, _ = invoke(
            capsys, "sweep", "--conjecture", "8", "--alpha-range", "1:1",
        )
        assert code == 1
        assert "counterexamples=1" in out

    def test_single_value_range(self, capsys):
        code, out, _ = invoke(
            capsys, "sweep", "--conjecture", "8", "--alpha-range", "3",
            "--depth", "2", "--format", "csv",
        )
        assert code == 0
        assert out == "conjecture,alpha,beta,depth,status\n8,3,0,2,pass\n"

    def test_bad_range_exits_2(self, capsys):
        code, _, err = invoke(
            capsys, "sweep", "--conjecture", "8", "--alpha-range", "2:1",
        )
        assert code == 2
        assert "error: empty range '2:1'" in err


class TestProp9:
    def test_json(self, capsys):
        code, out, _ = invoke(
            capsys, "prop9", "--alpha", "2", "--n", "3", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["conjecture"] == "prop9"
        assert payload["all_pass"] is True

    def test_alpha_is_required(self, capsys):
        code, _, err = invoke(capsys, "prop9", "--n", "3")
        assert code == 2
        assert "--alpha" in err


class TestOeis:
    @pytest.fixture(autouse=True)
    def isolated_cache(self, tmp_path, monkeypatch):
        monkeypatch.setenv("HANKELREV_CACHE_DIR", str(tmp_path))

    def test_offline_match(self, capsys):
        code, out, _ = invoke(
            capsys, "oeis", "--seq", "1,1,2,5,14,42,132", "--offline",
        )
        assert code == 0
        assert out.splitlines()[0] == "id       matched  name"
        assert out.splitlines()[1].startswith("A000108  7")

    def test_offline_no_match(self, capsys):
        code, out, _ = invoke(capsys, "oeis", "--seq", "3,1,4,1,5", "--offline")
        assert code == 0
        assert out == "no matches\n"

    def test_json(self, capsys):
        code, out, _ = invoke(
            capsys, "oeis", "--seq", "0,1,1,2,3,5,8", "--offline", "--format", "json",
        )
        assert code == 0
        assert json.loads(out)[0]["id"] == "A000045"

    def test_too_few_terms_exits_2(self, capsys):
        code, _, err = invoke(capsys, "oeis", "--seq", "1,2,3", "--offline")
        assert code == 2
        assert "need at least 4 terms" in err

    def test_online_failure_exits_2(self, capsys, monkeypatch):
        from hankelrev import oeis

        def fail(url, params):
            raise ConnectionError("refused")

        monkeypatch.setattr(oeis, "_http_get_json", fail)
        code, _, err = invoke(capsys, "oeis", "--seq", "1,2,3,4")
        assert code == 2
        assert "error: online lookup failed" in err


class TestUsage:
    def test_no_arguments_exits_2(self, capsys):
        assert invoke(capsys)[0] == 2

    def test_unknown_subcommand_exits_2(self, capsys):
        assert invoke(capsys, "frobnicate")[0] == 2

    def test_reruns_are_byte_identical(self, capsys):
        argv = (
            "verify", "--conjecture", "4", "--alpha", "2", "--beta", "3",
            "--depth", "4", "--format", "json",
        )
        first = invoke(capsys, *argv)
        second = invoke(capsys, *argv)
        assert first == second
