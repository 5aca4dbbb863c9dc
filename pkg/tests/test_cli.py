import json
import subprocess
import sys

import pytest

from qchar import cli, verify
from qchar.liealg import root_system
from qchar.verify import VerifyReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_c2(capsys):
    code, out, _ = run(capsys, "compute", "--type", "C", "--rank", "2", "--node", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == cli.SCHEMA
    assert doc["meta"] == {"type": "C", "rank": 2, "node": 2, "base_exp": 0}
    assert doc["totals"] == {"entries": 5, "mass": 5}
    assert {"monomial": [[2, 0, 1]], "weight": [0, 1], "mult": 1} in doc["entries"]


def test_compute_json_round_trip(capsys):
    _, out, _ = run(capsys, "compute", "--type", "D", "--rank", "4", "--node", "2", "--base-exp", "3")
    assert cli.dumps(json.loads(out)) == out
    assert json.loads(out)["totals"]["mass"] == 29


def test_compute_jobs_is_byte_identical(capsys):
    args = ["compute", "--type", "B", "--rank", "4", "--node", "2"]
    _, serial, _ = run(capsys, *args)
    _, parallel, _ = run(capsys, *args, "--jobs", "3")
    assert serial == parallel


def test_text_output_and_notation(capsys):
    code, out, _ = run(capsys, "compute", "--type", "A", "--rank", "1", "--node", "1",
                       "--format", "text", "--notation", "y")
    assert code == 0
    assert "Y_{1,0}" in out and "Y_{1,2}^-1" in out
    assert out.splitlines()[-1] == "# entries 2, mass 2"


def test_out_file(tmp_path, capsys):
    target = tmp_path / "c2.json"
    code, out, _ = run(capsys, "compute", "--type", "C", "--rank", "2", "--node", "1", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == cli.dumps(cli.compute_document(root_system("C", 2), 1))


def test_dominant_d4(capsys):
    code, out, _ = run(capsys, "dominant", "--type", "D", "--rank", "4", "--node", "2", "--r", "0")
    assert code == 0
    doc = json.loads(out)
    assert doc["totals"] == {"entries": 4, "mass": 5}
    (group,) = doc["groups"]
    doubled = [e for e in group["entries"] if e["mult"] == 2]
    assert len(doubled) == 1 and doubled[0]["class_exponent"] == 1
    assert sorted(s["parts"] for s in doubled[0]["partitions"]) == [[2], [3]]


def test_dominant_text(capsys):
    code, out, _ = run(capsys, "dominant", "--type", "C", "--rank", "3", "--node", "3", "--format", "text")
    assert code == 0 and "r = 1" in out and "r = 3" in out


def test_partitions(capsys):
    code, out, _ = run(capsys, "partitions", "--type", "D", "--rank", "4", "--node", "2")
    assert code == 0
    assert json.loads(out)["groups"] == [{"r": 0, "by_length": {"0": [[]], "1": [[1], [2], [3]]}},
                                         {"r": 2, "by_length": {"0": [[]]}}]
    code, out, _ = run(capsys, "partitions", "--type", "C", "--rank", "3", "--node", "3", "--format", "text")
    assert code == 0 and "r=1 k=1: (2,)" in out


@pytest.mark.parametrize("argv", [
    ["compute", "--type", "D", "--rank", "3", "--node", "1"],
    ["compute", "--type", "C", "--rank", "2", "--node", "3"],
    ["compute", "--type", "C", "--rank", "2", "--node", "1", "--jobs", "0"],
    ["dominant", "--type", "C", "--rank", "3", "--node", "3", "--r", "2"],
    ["dominant", "--type", "C", "--rank", "3", "--node", "1"],
    ["partitions", "--type", "D", "--rank", "5", "--node", "5"],
    ["verify", "--suite", "bogus"],
    ["verify", "--max-rank", "0"],
    ["compute", "--type", "E", "--rank", "6", "--node", "1"],
    [],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    assert err


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "counts", "--max-rank", "4")
    assert code == 0 and "PASS" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "braid", "--max-rank", "3", "--samples", "10",
                       "--format", "json")
    assert code == 0
    assert [r["name"] for r in json.loads(out)] == ["braid-relations", "closed-forms"]


def test_verify_failure_exit_code(capsys, monkeypatch):
    def failing(max_rank):
        return VerifyReport("counts", {"max_rank": max_rank}, False, 1, {"where": "here"})

    monkeypatch.setitem(verify.CHECKS, "counts", failing)
    code, out, _ = run(capsys, "verify", "--suite", "counts")
    assert code == 1
    assert "FAIL" in out and '"where": "here"' in out


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qchar.cli", "compute", "--type", "A", "--rank", "2",
                           "--node", "1"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["totals"]["entries"] == 3
