import json

import jsonschema
import pytest

from treecount.cli import main
from treecount.schemas import (COUNT_REPORT_SCHEMA, PROFILE_SCHEMA,
                               TRANSFORM_DELTA_SCHEMA, VERIFICATION_SCHEMA)


@pytest.fixture
def p5_file(tmp_path):
    path = tmp_path / "p5.tree"
    path.write_text("5\n0 1\n1 2\n2 3\n3 4\n")
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCount:
    def test_json_output(self, capsys, p5_file):
        code, out, _ = run_cli(capsys, "count", "--input", p5_file, "--json")
        assert code == 0
        payload = json.loads(out)
        jsonschema.validate(payload, COUNT_REPORT_SCHEMA)
        assert payload["n"] == 5 and payload["F"] == "15"
        assert payload["Fstar"] == "9" and payload["W"] == "20"

    def test_human_output(self, capsys, p5_file):
        code, out, _ = run_cli(capsys, "count", "--input", p5_file)
        assert code == 0 and "F      = 15" in out

    def test_csv_output(self, capsys, p5_file):
        code, out, _ = run_cli(capsys, "count", "--input", p5_file, "--csv")
        assert code == 0
        assert out.splitlines() == ["n,F,Fstar,W", "5,15,9,20"]

    def test_levelseq_input(self, capsys, tmp_path):
        f = tmp_path / "star.tree"
        f.write_text("0 1 1 1\n")
        code, out, _ = run_cli(capsys, "count", "--input", str(f),
                               "--format", "levelseq", "--json")
        assert code == 0 and json.loads(out)["F"] == "11"

    def test_bad_input_is_usage_error(self, capsys, tmp_path):
        f = tmp_path / "bad.tree"
        f.write_text("4\n0 1\n1 2\n2 0\n")
        code, _, err = run_cli(capsys, "count", "--input", str(f))
        assert code == 2 and "count" in err


class TestConstruct:
    def test_closed_form_line(self, capsys):
        code, out, _ = run_cli(capsys, "construct", "--family", "a_nq",
                               "--n", "6", "--q", "2", "--closed-form", "F")
        assert code == 0 and out == "30 (Theorem 4.1)\n"

    def test_edgelist_output_parses(self, capsys):
        code, out, _ = run_cli(capsys, "construct", "--family", "spider",
                               "--n", "7", "--k", "3")
        assert code == 0
        from treecount.tree import parse_tree
        assert parse_tree(out).n == 7

    def test_levelseq_output(self, capsys):
        code, out, _ = run_cli(capsys, "construct", "--family", "star",
                               "--n", "4", "--format", "levelseq")
        assert code == 0 and out == "0 1 1 1\n"

    def test_bad_params_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "construct", "--family", "a_nq",
                               "--n", "5", "--q", "3")
        assert code == 2 and "construct" in err


class TestTransform:
    def test_b_transform_delta(self, capsys, tmp_path):
        f = tmp_path / "p4.tree"
        f.write_text("4\n0 1\n1 2\n2 3\n")
        code, out, _ = run_cli(capsys, "transform", "--kind", "B",
                               "--input", str(f), "--u", "1", "--v", "2", "--json")
        assert code == 0
        payload = json.loads(out)
        jsonschema.validate(payload, TRANSFORM_DELTA_SCHEMA)
        assert payload["F_before"] == "10" and payload["F_after"] == "11"
        assert payload["Fstar_before"] == "7" and payload["Fstar_after"] == "10"

    def test_human_mode_prints_tree_then_delta(self, capsys, p5_file):
        code, out, _ = run_cli(capsys, "transform", "--kind", "A",
                               "--input", p5_file, "--u", "1", "--component-root", "0")
        assert code == 0 and out.startswith("5\n")


class TestEnumerate:
    def test_count_only(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--n", "7", "--count-only")
        assert code == 0 and out == "11\n"

    def test_constrained_count(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--n", "6",
                               "--matching", "2", "--count-only")
        assert code == 0 and out == "3\n"

    def test_blocks(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--n", "4")
        assert code == 0
        blocks = out.strip().split("\n\n")
        assert len(blocks) == 2 and all(b.startswith("4\n") for b in blocks)

    def test_csv(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--n", "4", "--csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n,edges" and len(lines) == 3


class TestVerify:
    def test_passing_run_exit_zero(self, capsys, tmp_path):
        report = tmp_path / "report.json"
        code, out, _ = run_cli(capsys, "verify", "--theorem", "T4.3",
                               "--n-min", "4", "--n-max", "10",
                               "--json", str(report))
        assert code == 0
        assert "# theorem=T4.3" in out and "FAIL" not in out
        payload = json.loads(report.read_text())
        jsonschema.validate(payload, VERIFICATION_SCHEMA)
        assert all(row["pass"] for row in payload)

    def test_failing_run_exit_one(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--theorem", "T4.8",
                               "--n-min", "3", "--n-max", "3",
                               "--formula-variant", "product")
        assert code == 1 and "FAIL" in out

    def test_lemma_run(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--lemma", "L3.2",
                               "--samples", "40", "--seed", "42")
        assert code == 0 and "# lemma=L3.2 samples=40 seed=42" in out

    def test_requires_exactly_one_target(self, capsys):
        code, _, err = run_cli(capsys, "verify")
        assert code == 2 and "--theorem/--lemma" in err

    def test_byte_identical_reruns(self, capsys):
        _, out1, _ = run_cli(capsys, "verify", "--theorem", "T4.1",
                             "--n-min", "5", "--n-max", "8")
        _, out2, _ = run_cli(capsys, "verify", "--theorem", "T4.1",
                             "--n-min", "5", "--n-max", "8", "--jobs", "2")
        assert out1.replace("jobs=1", "jobs=2") == out2

    def test_csv_mode(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--theorem", "L2star",
                               "--n-min", "3", "--n-max", "5", "--csv")
        assert code == 0
        assert out.splitlines()[1].startswith("theorem,n,constraint")


class TestProfile:
    def test_json(self, capsys, p5_file):
        code, out, _ = run_cli(capsys, "profile", "--input", p5_file, "--json")
        assert code == 0
        payload = json.loads(out)
        jsonschema.validate(payload, PROFILE_SCHEMA)
        assert payload["diameter"] == 4 and payload["centers"] == [2]

    def test_human(self, capsys, p5_file):
        code, out, _ = run_cli(capsys, "profile", "--input", p5_file)
        assert code == 0 and "matching = 2" in out
