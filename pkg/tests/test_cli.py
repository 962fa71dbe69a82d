import json
import subprocess
import sys

import pytest

from schur_eq.cli import main
from schur_eq.littlewood_richardson import SchurExpansion


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestExpand:
    def test_paper_example(self, capsys):
        code, out, _ = run(capsys, "expand", "3,2/1")
        assert code == 0
        assert out == "3,1: 1\n2,2: 1\n"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "expand", "3,2/1", "--json")
        assert code == 0
        assert json.loads(out) == [{"partition": [3, 1], "coefficient": 1}, {"partition": [2, 2], "coefficient": 1}]

    def test_json_round_trip(self, capsys):
        _, out, _ = run(capsys, "expand", "5,4,3,2/3,1", "--json")
        assert SchurExpansion.from_json(out).to_json() + "\n" == out

    def test_restricted_to_one_variable(self, capsys):
        code, out, _ = run(capsys, "expand", "3,2/1", "--nvars", "1", "--json")
        assert code == 0 and json.loads(out) == []

    def test_containment_error(self, capsys):
        code, _, err = run(capsys, "expand", "2,2/3")
        assert code == 2
        assert "ContainmentViolation" in err

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "expand", "1,2")
        assert code == 2
        assert "index 1" in err

    def test_disconnected(self, capsys):
        code, _, err = run(capsys, "expand", "3,1,1/2")
        assert code == 3
        assert "disconnected" in err


class TestCheck:
    def test_rotated(self, capsys):
        code, out, _ = run(capsys, "check", "4,4,4,4/2,2,1", "--json")
        assert code == 0
        assert json.loads(out) == {"status": "equals", "partition": [4, 3, 2, 2]}

    def test_text(self, capsys):
        _, out, _ = run(capsys, "check", "4,4,4,4/2,2,1")
        assert out == "s[4,4,4,4/2,2,1] = s[4,3,2,2]\n"

    def test_not_equal_with_witnesses(self, capsys):
        code, out, _ = run(capsys, "check", "3,2/1", "--nvars", "2", "--json")
        assert code == 0
        verdict = json.loads(out)
        assert verdict["status"] == "not_equal"
        assert len(verdict["witnesses"]) == 2

    def test_infinite_not_equal(self, capsys):
        code, out, _ = run(capsys, "check", "3,2/1", "--json")
        assert code == 0
        assert json.loads(out) == {"status": "not_equal", "witnesses": [". 1 1\n1 2", ". 1 1\n2 2"]}
        _, out, _ = run(capsys, "check", "3,2/1")
        assert "not a single Schur function" in out

    def test_zero(self, capsys):
        code, out, _ = run(capsys, "check", "2,2", "--nvars", "1", "--json")
        assert code == 0 and json.loads(out) == {"status": "zero"}

    def test_bad_nvars(self):
        with pytest.raises(SystemExit) as exc:
            main(["check", "2,2", "--nvars", "0"])
        assert exc.value.code == 2


class TestWitness:
    def test_bounded_paper_tableau(self, capsys):
        code, out, _ = run(capsys, "witness", "4,3,2,2/2,1", "--nvars", "5")
        assert code == 0
        assert out == ". . 1 1\n. 2 2\n1 3\n2 4\n"

    def test_unique(self, capsys):
        code, out, _ = run(capsys, "witness", "3,2")
        assert code == 0 and "only lattice filling" in out

    def test_precondition(self, capsys):
        code, _, err = run(capsys, "witness", "2,2", "--nvars", "1")
        assert code == 2 and "PreconditionViolation" in err


class TestSurvey:
    def test_small(self, capsys):
        code, out, _ = run(capsys, "survey", "--max-boxes", "4", "--nvars", "1,2", "--json")
        assert code == 0
        report = json.loads(out)
        assert report["summary"]["shapes"] == 16
        assert all(r["agreement"] for r in report["records"])

    def test_empty(self, capsys):
        code, out, _ = run(capsys, "survey", "--max-boxes", "0", "--json")
        assert code == 0
        assert json.loads(out)["records"] == []

    def test_shearing_record_at_ten_boxes(self, capsys):
        code, out, _ = run(capsys, "survey", "--max-boxes", "10", "--nvars", "3", "--json")
        assert code == 0
        record = next(r for r in json.loads(out)["records"] if r["shape"] == "4,4,2,2/2")
        assert record["finite"]["3"] == {"status": "equals", "partition": [4, 4, 2]}

    def test_disagreement_exit_code(self, capsys):
        code, out, _ = run(capsys, "survey", "--max-boxes", "10", "--nvars", "4", "--json")
        assert code == 4
        bad = {r["shape"] for r in json.loads(out)["records"] if not r["agreement"]}
        assert bad == {"4,4,4,4,2,1/3,3,3", "4,4,4,1,1,1/3,2"}

    def test_deterministic_and_out_file(self, tmp_path, capsys):
        first, second = tmp_path / "a.json", tmp_path / "b.json"
        assert run(capsys, "survey", "--max-boxes", "6", "--json", "--out", str(first))[0] == 0
        assert run(capsys, "survey", "--max-boxes", "6", "--json", "--out", str(second), "--jobs", "2")[0] == 0
        assert first.read_bytes() == second.read_bytes()

    def test_safety_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("SCHUR_EQ_MAX_BOXES", "3")
        code, _, err = run(capsys, "survey", "--max-boxes", "4")
        assert code == 2 and "safety cap" in err

    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "survey", "--max-boxes", "3", "--nvars", "2")
        assert code == 0
        assert out.splitlines()[-1].startswith("shapes=7 disagreements=0")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "schur_eq", "expand", "3,2/1", "--json"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)[0] == {"partition": [3, 1], "coefficient": 1}
