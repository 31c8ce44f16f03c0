import json
import subprocess
import sys

import pytest

from patrep import graphs as G
from patrep.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def graph_file(tmp_path):
    def write(g, name="g.json"):
        p = tmp_path / name
        p.write_text(json.dumps(g.to_json()))
        return str(p)
    return write


def test_check_example(capsys, schema_validator):
    code, out, _ = run(capsys, "check", "--word", "32414", "--pattern", "123")
    data = json.loads(out)
    assert code == 0 and data["avoids"] is True
    assert data["graph"]["edges"] == [[1, 2], [1, 3], [1, 4], [2, 3]]
    schema_validator(data, "check")


def test_graph_formats(capsys, schema_validator):
    code, out, _ = run(capsys, "graph", "--word", "abcbd")
    schema_validator(json.loads(out), "graph")
    code, out, _ = run(capsys, "graph", "--word", "1212", "--format", "dot")
    assert code == 0 and "1 -- 2" in out
    code, out, _ = run(capsys, "graph", "--word", "1212", "--format", "edges")
    assert G.Graph.from_text(out) == G.complete(2)


def test_construct_path(capsys, schema_validator):
    code, out, _ = run(capsys, "construct", "--family", "path", "--n", "4", "--pattern", "123")
    data = json.loads(out)
    assert code == 0 and data["word"] == "43423121" and data["self_check"]["pass"]
    schema_validator(data, "construct")


def test_construct_tree(capsys, schema_validator, graph_file):
    code, out, _ = run(capsys, "construct", "--family", "tree", "--n", "9", "--seed", "4",
                       "--pattern", "132")
    data = json.loads(out)
    assert code == 0 and data["self_check"]["pass"]
    schema_validator(data, "construct")
    path = graph_file(G.star(3))
    code, out, _ = run(capsys, "construct", "--family", "tree", "--tree-file", path,
                       "--root", "4", "--pattern", "132")
    assert code == 0
    code, _, err = run(capsys, "construct", "--family", "tree", "--tree-file",
                       graph_file(G.cycle(4), "c.json"), "--pattern", "132")
    assert code == 2 and "error" in err


def test_construct_self_check_failure(capsys):
    # 43214321 contains 143, a 132 occurrence, so the self-check must fail
    code, out, _ = run(capsys, "construct", "--family", "complete2u", "--n", "4", "--pattern", "132")
    assert code == 1 and not json.loads(out)["self_check"]["pass"]


def test_reduce(capsys, schema_validator):
    code, out, _ = run(capsys, "reduce", "--word", "11221")
    data = json.loads(out)
    assert code == 0 and data["word"] == "2211"
    assert [s["rule"] for s in data["trace"]] == ["isolated-vertex"]
    schema_validator(data, "reduce")
    code, _, err = run(capsys, "reduce", "--word", "123")
    assert code == 2 and "123" in err


def test_represent_exit_codes(capsys, schema_validator, graph_file):
    code, out, _ = run(capsys, "represent", "--graph-file", graph_file(G.complete(3)),
                       "--pattern", "123")
    assert code == 0
    schema_validator(json.loads(out), "certificate")
    code, out, _ = run(capsys, "represent", "--graph-file", graph_file(G.complete(4)),
                       "--pattern", "132", "--uniform", "2")
    data = json.loads(out)
    assert code == 3 and data["status"] == "not-representable"
    assert data["completeness"] == {"flag": True, "tag": "two-uniform-by-definition"}
    schema_validator(data, "certificate")
    # one copy each makes every pair alternate, so two isolated vertices fail
    code, out, _ = run(capsys, "represent", "--graph-file", graph_file(G.empty(2)),
                       "--pattern", "132", "--global-cap", "1")
    data = json.loads(out)
    assert code == 4 and data["status"] == "unknown"
    schema_validator(data, "certificate")


def test_represent_deterministic_across_jobs(capsys, graph_file):
    path = graph_file(G.star(4))
    outs = []
    for jobs in ("1", "2"):
        code, out, _ = run(capsys, "represent", "--graph-file", path, "--pattern", "123",
                           "--jobs", jobs)
        data = json.loads(out)
        outs.append(data["witness"])
    assert outs[0] == outs[1]


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "check", "--word", "1?2", "--pattern", "123")[0] == 2
    assert run(capsys, "check", "--word", "12", "--pattern", "113")[0] == 2
    assert run(capsys, "represent", "--graph-file", str(tmp_path / "missing"),
               "--pattern", "123")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{\"n\": 2, \"edges\": [[1, 5]]}")
    assert run(capsys, "represent", "--graph-file", str(bad), "--pattern", "123")[0] == 2
    assert run(capsys, "chords", "--word", "121")[0] == 2
    assert run(capsys, "chords", "--word", "321", "--saturate")[0] == 2
    assert run(capsys, "graph", "--word", "13")[0] == 2


def test_verify_theorem(capsys, schema_validator):
    code, out, err = run(capsys, "verify-theorem", "--id", "4.5")
    data = json.loads(out)
    assert code == 0 and "PASS" in err and data["verdict"] == "PASS"
    assert data["certificate"]["kind"] == "exhausted"
    assert data["certificate"]["completeness"]["flag"] is True
    schema_validator(data, "verify")
    schema_validator(data["certificate"], "certificate")


def test_atlas(capsys, schema_validator):
    code, out, err = run(capsys, "atlas", "--max-n", "3", "--pattern", "132")
    data = json.loads(out)
    assert code == 0 and data["summary"]["counts"]["representable"] == 7
    assert "7 representable" in err
    schema_validator(data, "atlas")


def test_chords(capsys, schema_validator, tmp_path):
    svg = tmp_path / "c.svg"
    dot = tmp_path / "c.dot"
    code, out, _ = run(capsys, "chords", "--word", "1234123456785678", "--svg", str(svg),
                       "--dot", str(dot))
    data = json.loads(out)
    assert code == 0 and len(data["crossing_graph"]["edges"]) == 12
    assert svg.read_text().startswith("<svg") and dot.read_text().startswith("graph")
    schema_validator(data, "chords")
    code, out, _ = run(capsys, "chords", "--word", "2121")
    assert code == 0


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "patrep", "check", "--word", "321",
                        "--pattern", "123"], capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["avoids"] is True
    r = subprocess.run([sys.executable, "-m", "patrep", "check", "--word", "321"],
                       capture_output=True, text=True)
    assert r.returncode == 2
