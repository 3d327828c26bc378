import json
import subprocess
import sys

import pytest

from qtrace.cli import RunConfig, main
from qtrace.mutation import p4_plan
from qtrace.trace import corner_arc_trace, polygon_arc


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_quiver_dot(tmp_path, capsys):
    dot = tmp_path / "out.dot"
    code, out, _ = run(capsys, "quiver", "--surface", "P4", "--tri", "lambda", "--n", "3",
                       "--dot", str(dot))
    assert code == 0
    assert json.loads(out)["vertex_count"] == 12
    text = dot.read_text()
    assert text.count("[shape") == 12 or sum(1 for ln in text.splitlines()
                                             if "->" not in ln and "label" in ln) == 12


def test_paths_crossing_arc(capsys, tmp_path):
    dot = tmp_path / "net.dot"
    code, out, _ = run(capsys, "paths", "--tri", "lambda'", "--n", "4", "--i", "2", "--j", "1",
                       "--dot", str(dot))
    data = json.loads(out)
    assert code == 0 and data["count"] == 2
    assert sorted(len(p["edges"]) for p in data["paths"]) == [6, 8]
    assert "alpha" in dot.read_text()


def test_paths_upper_triangle_empty(capsys):
    code, out, _ = run(capsys, "paths", "--n", "3", "--i", "1", "--j", "2")
    assert code == 0 and json.loads(out)["count"] == 0


def test_trace_certificates(capsys):
    code, out, _ = run(capsys, "trace", "--n", "3", "--arc", "b", "--i", "2", "--j", "1")
    data = json.loads(out)
    assert code == 0 and data["certificates"]
    assert all(c["balanced"]["balanced"] and c["via_H"] and c["mutable_balanced"]
               for c in data["certificates"])


def test_verify_naturality(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "naturality", "--surface", "P4", "--n", "2",
                       "--json", str(report))
    data = json.loads(report.read_text())
    assert code == 0 and data["verdict"]
    per_arc = {}
    for c in data["cases"]:
        per_arc[c["case"][0]] = per_arc.get(c["case"][0], 0) + 1
    assert per_arc == {"a": 3, "b": 3, "c": 3}
    assert json.loads(out) == data


def test_verify_pentagon(capsys):
    code, out, _ = run(capsys, "verify", "pentagon", "--n", "2")
    assert code == 0 and json.loads(out)["verdict"]


def test_verify_deterministic_with_shuffle(capsys):
    args = ("verify", "naturality", "--n", "2", "--arc", "a", "--shuffle-seed", "5")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    a, b = json.loads(first), json.loads(second)
    a.pop("wall_time"), b.pop("wall_time")
    assert a == b


def test_theta_command(capsys, tmp_path):
    plan = p4_plan(2)
    elem = corner_arc_trace(plan.target, polygon_arc(plan.target, "a", 2, 1))
    (tmp_path / "plan.json").write_text(json.dumps(plan.to_json()))
    (tmp_path / "el.json").write_text(json.dumps(elem.to_json()))
    code, out, _ = run(capsys, "theta", "--plan", str(tmp_path / "plan.json"),
                       "--input", str(tmp_path / "el.json"))
    assert code == 0
    data = json.loads(out)
    expect = corner_arc_trace(plan.source, polygon_arc(plan.source, "a", 2, 1))
    assert data["element"] == json.loads(json.dumps(expect.to_json()))
    assert len(data["steps"]) == plan.length


@pytest.mark.parametrize("argv,err", [
    (["quiver", "--n", "1"], "ValueError"),
    (["quiver", "--surface", "Q7"], "ValueError"),
    (["paths", "--arc", "z", "--i", "1", "--j", "1"], "UnsupportedArc"),
    (["quiver", "--surface", "P2"], "PolygonTooSmall"),
])
def test_errors_are_json(capsys, argv, err):
    code, _, stderr = run(capsys, *argv)
    assert code == 2
    assert json.loads(stderr)["error"] == err


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(command="quiver", threads=0)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qtrace", "quiver", "--n", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["vertex_count"] == 5
