from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from homcount.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, _ = call(*argv)
    return code, json.loads(out)


def test_count_examples():
    code, out, _ = call("count", "--group", "preset:S3", "--surface", "orientable:g=1", "--method", "all")
    assert code == 0
    assert out.startswith('{"hom_count":"18","methods_agree":true')
    code, obj = call_json("count", "--group", "preset:Q8", "--surface", "nonorientable:k=2")
    assert (code, obj["hom_count"], obj["methods_agree"]) == (0, "40", True)
    code, obj = call_json("count", "--group", "preset:S3", "--surface", "orientable:g=0")
    assert obj["hom_count"] == "1"


def test_count_single_method_and_skip(monkeypatch):
    code, obj = call_json("count", "--group", "preset:D4", "--surface", "orientable:g=2",
                          "--method", "formula")
    assert obj["methods"] == {"formula": obj["hom_count"]}
    code, obj = call_json("count", "--group", "preset:S3", "--surface", "orientable:g=2",
                          "--work-bound", "10")
    assert code == 0 and obj["skipped"] == ["brute"] and obj["hom_count"] == "486"
    monkeypatch.setenv("HOMCOUNT_WORK_BOUND", "10")
    code, obj = call_json("count", "--group", "preset:S3", "--surface", "orientable:g=2",
                          "--method", "brute")
    assert code == 1 and obj["module"] == "surface-count"


def test_counts_are_strings():
    code, obj = call_json("count", "--group", "preset:C2", "--surface", "orientable:g=40",
                          "--method", "formula")
    assert obj["hom_count"] == str(2 ** 80)


def test_domain_errors_exit_1():
    code, obj = call_json("count", "--group", "preset:S3", "--surface", "torus")
    assert code == 1 and obj["module"] == "surface-count" and "error" in obj
    code, obj = call_json("chartable", "--group", "preset:S3", "--prime", "7")
    assert code == 1 and obj["module"] == "char-table"
    code, obj = call_json("group", "info", "--group", "preset:nosuch")
    assert code == 1 and obj["module"] == "group-core"
    code, obj = call_json("series", "--group", "preset:C2", "--profile", "3:1")
    assert code == 1 and obj["module"] == "genfun"


def test_usage_errors_exit_2():
    code, _, err = call("count", "--group", "preset:S3", "--surface", "orientable:g=1", "--bogus")
    assert code == 2 and "--bogus" in err
    code, _, err = call("count", "--group", "preset:S3")
    assert code == 2 and "--surface" in err
    code, _, err = call("classfn", "--group", "preset:S3", "--kind", "q", "--n", "1")
    assert code == 2 and "--kind" in err
    code, _, _ = call()
    assert code == 2


def test_chartable_json():
    code, obj = call_json("chartable", "--group", "preset:Q8")
    assert obj["degrees"] == [1, 1, 1, 1, 2]
    assert obj["fs"] == [1, 1, 1, 1, -1]
    assert len(obj["chi_mod_p"]) == 5
    code, obj = call_json("chartable", "--group", "preset:S3", "--prime", "79")
    assert obj["prime"] == 79


def test_group_info():
    code, obj = call_json("group", "info", "--group", "preset:cyclic:4")
    assert obj["order"] == 4 and obj["involutions"] == "2"
    assert [c["square_class"] for c in obj["classes"]] == [0, 2, 0, 2]


def test_classfn():
    code, obj = call_json("classfn", "--group", "preset:S3", "--kind", "f", "--n", "1")
    assert [c["value"] for c in obj["classes"]] == ["18", "9", "0"]
    code, obj = call_json("classfn", "--group", "preset:S3", "--kind", "r", "--n", "2", "--at-class", "0")
    assert obj["value"] == "18"
    code, _, err = call("classfn", "--group", "preset:S3", "--kind", "r", "--n", "2", "--at-class", "9")
    assert code == 2 and "--at-class" in err


def test_graph_commands(tmp_path):
    path = tmp_path / "theta.json"
    path.write_text(json.dumps({"rotation": [[0, 1, 2], [3, 5, 4]],
                                "matching": [[0, 3], [1, 4], [2, 5]], "twists": [0, 0, 0]}))
    code, obj = call_json("graph", "analyze", "--graph", str(path))
    assert (obj["faces"], obj["surface"], obj["automorphisms"]["oriented"]) == (3, "orientable:g=0", 6)
    code, obj = call_json("graph", "mu", "--graph", str(path), "--group", "preset:S3")
    assert obj["mu"] == obj["expected"] == "36"
    code, _, err = call("graph", "mu", "--graph", str(path))
    assert code == 2 and "--group" in err
    code, obj = call_json("graph", "analyze", "--graph", str(tmp_path / "missing.json"))
    assert code == 1 and obj["module"] == "fatgraph"


def test_series():
    code, out, _ = call("series", "--group", "preset:C2", "--profile", "3:2")
    assert out.startswith('{"profile":{"3":2},"coefficient":"5/3","graph_classes":3')
    code, obj = call_json("series", "--group", "preset:trivial", "--profile", "4:1")
    assert obj["coefficient"] == "3/4"
    code, obj = call_json("series", "--group", "preset:S3", "--profile", "3:2", "--mobius")
    assert obj["sides_agree"] and obj["graph_classes"] == 7


@pytest.mark.parametrize("group", ["preset:S3", "preset:quaternion8", "preset:cyclic:1"])
def test_verify(group):
    code, obj = call_json("verify", "--group", group, "--max-genus", "2", "--max-crosscaps", "3")
    assert code == 0 and obj["all_passed"]
    assert all(c["passed"] for c in obj["checks"])
    if group == "preset:quaternion8":
        assert obj["fs"]["g3"]


def test_table_format_has_same_numbers():
    _, js, _ = call("count", "--group", "preset:S3", "--surface", "orientable:g=2")
    _, table, _ = call("count", "--group", "preset:S3", "--surface", "orientable:g=2", "--format", "table")
    obj = json.loads(js)
    rows = dict(line.split(None, 1) for line in table.splitlines())
    assert rows["hom_count"] == obj["hom_count"]
    assert rows["methods.brute"] == obj["methods"]["brute"]


def test_json_is_deterministic():
    argv = ("series", "--group", "preset:S3", "--profile", "4:1", "--mobius")
    assert call(*argv)[1] == call(*argv)[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "homcount", "count", "--group", "preset:S3",
                           "--surface", "orientable:g=1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["hom_count"] == "18"
