import json

import pytest

from ggx.cli import main
from ggx.graphs import graph_from_json


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_group_info(capsys):
    code, out, _ = run(capsys, "group", "info", "A5")
    assert code == 0
    obj = json.loads(out)
    assert obj["order"] == 60
    assert obj["orderCensus"] == [[1, 1], [2, 15], [3, 20], [5, 24]]
    assert {e["prime"]: e["cyclic"] for e in obj["sylow"]} == {2: False, 3: True, 5: True}
    assert {e["prime"]: e["unique"] for e in obj["sylow"]} == {2: False, 3: False, 5: False}


def test_group_info_usage_error(capsys):
    code, _, err = run(capsys, "group", "info", "Z99")
    assert code == 2
    assert "groups" in err


def test_perfect_check_a5(capsys):
    code, out, _ = run(capsys, "perfect", "check", "--group", "A5")
    assert code == 0
    obj = json.loads(out)
    assert obj["status"] == "perfect" and obj["witness"] is None


def test_perfect_check_c30xc30(capsys):
    code, out, _ = run(capsys, "perfect", "check", "--group", "C30xC30")
    assert code == 1
    obj = json.loads(out)
    assert obj["status"] == "imperfect"
    assert obj["witness"]["kind"] == "hole" and len(obj["witness"]["labels"]) == 5


def test_perfect_check_budget_exhaustion(capsys):
    code, out, _ = run(capsys, "perfect", "check", "--group", "C30xC30", "--budget", "1")
    assert code == 3
    assert json.loads(out)["status"] == "unknown"


def test_witness_check_pass_and_fail(capsys):
    code, out, _ = run(
        capsys,
        "witness", "check", "--group", "S8",
        "--cycle", "(1 2 3 4 5);(6 7 8);(1 2);(3 4 5);(6 7)",
    )
    assert code == 0 and json.loads(out)["induced"] is True
    code, out, _ = run(
        capsys, "witness", "check", "--group", "S8", "--cycle", "(1 2 3 4 5);(6 7 8);(1 2)"
    )
    assert code == 1 and json.loads(out)["induced"] is False


def test_graph_build_json_and_reconstruct_round_trip(tmp_path, capsys):
    pg_path = tmp_path / "c6-power.json"
    code, _, _ = run(
        capsys, "graph", "build", "--group", "C6", "--kind", "power", "--out", str(pg_path)
    )
    assert code == 0
    g = graph_from_json(pg_path.read_text())
    assert g.n == 6 and g.edge_count() == 13
    code, out, _ = run(capsys, "reconstruct", "enhanced", "--in", str(pg_path))
    assert code == 0
    assert len(json.loads(out)["edges"]) == 15


def test_reconstruct_directed_unsupported_center(tmp_path, capsys):
    pg_path = tmp_path / "c6.json"
    run(capsys, "graph", "build", "--group", "C6", "--kind", "power", "--out", str(pg_path))
    code, _, err = run(capsys, "reconstruct", "directed", "--in", str(pg_path))
    assert code == 2
    assert "reconstruct" in err


def test_graph_build_dot_and_csv(capsys):
    code, out, _ = run(capsys, "graph", "build", "--group", "C3", "--kind", "power", "--dot")
    assert code == 0 and out.startswith("graph {")
    code, out, _ = run(capsys, "graph", "build", "--group", "S3", "--kind", "dpower", "--csv")
    assert code == 0 and out.splitlines()[0] == "source,target"


def test_graph_cap_exit_code(capsys):
    code, _, err = run(capsys, "graph", "build", "--group", "S7", "--kind", "power", "--cap", "10")
    assert code == 3
    assert "powergraphs" in err


def test_quotient_command(tmp_path, capsys):
    pg_path = tmp_path / "c6.json"
    run(capsys, "graph", "build", "--group", "C6", "--kind", "power", "--out", str(pg_path))
    code, out, _ = run(capsys, "graph", "quotient", str(pg_path))
    assert code == 0
    obj = json.loads(out)
    assert obj["classes"] == [["0", "1", "5"], ["2", "4"], ["3"]]


def test_classes_command(capsys):
    code, out, _ = run(capsys, "classes", "--group", "D4")
    assert code == 0
    obj = json.loads(out)
    assert obj["centerTrivial"] is True
    assert ["r", "r2", "r3"] in obj["equivClasses"]
    complex_types = [t for t in obj["types"] if t["kind"] == "complex"]
    assert complex_types == [{"kind": "complex", "p": 2, "r": 2, "s": 1}]


def test_verify_with_tiny_corpus(tmp_path, capsys):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("# tiny\nC6\nC12\nC30\n")
    code, out, err = run(capsys, "verify", "--suite", "embedding", "--corpus", str(corpus))
    assert code == 0
    obj = json.loads(out)
    assert obj["passed"] is True and obj["suite"] == "embedding"
    assert "PASS" in err


def test_verify_unknown_suite_is_usage_error(capsys):
    code, _, _ = run(capsys, "verify", "--suite", "nope")
    assert code == 2


def test_bad_jobs_value(capsys):
    code, _, err = run(capsys, "--jobs", "0", "group", "info", "C6")
    assert code == 2 and "jobs" in err.lower()


def test_missing_subcommand_is_usage_error(capsys):
    assert run(capsys, "group")[0] == 2
    assert run(capsys)[0] == 2


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0


def test_missing_input_file(capsys):
    code, _, err = run(capsys, "reconstruct", "enhanced", "--in", "/nonexistent/g.json")
    assert code == 2 and err


def test_budget_env_var(capsys, monkeypatch):
    monkeypatch.setenv("GGX_BUDGET", "1")
    code, out, _ = run(capsys, "perfect", "check", "--group", "C30xC30")
    assert code == 3 and json.loads(out)["status"] == "unknown"
    # the flag wins over the environment
    code, out, _ = run(capsys, "perfect", "check", "--group", "C30xC30", "--budget", "100000")
    assert code == 1 and json.loads(out)["status"] == "imperfect"


def test_export_graph_function(tmp_path):
    import io

    from ggx.cli import export_graph
    from ggx.graphs import Graph

    g = Graph.from_edges(2, [(0, 1)], labels=["a", "b"])
    buf = io.StringIO()
    export_graph(g, "csv", buf)
    assert buf.getvalue() == "source,target\na,b\n"
    with pytest.raises(ValueError):
        export_graph(g, "xml", io.StringIO())


def test_determinism_byte_identical(capsys):
    _, out1, _ = run(capsys, "classes", "--group", "S4")
    _, out2, _ = run(capsys, "classes", "--group", "S4")
    assert out1 == out2
    _, d1, _ = run(capsys, "graph", "build", "--group", "D6", "--kind", "enhanced", "--dot")
    _, d2, _ = run(capsys, "graph", "build", "--group", "D6", "--kind", "enhanced", "--dot")
    assert d1 == d2


def test_determinism_across_processes_and_hash_seeds():
    import os
    import subprocess
    import sys

    def run_proc(seed):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        return subprocess.run(
            [sys.executable, "-m", "ggx.cli", "classes", "--group", "S4"],
            env=env,
            capture_output=True,
            timeout=300,
        ).stdout

    assert run_proc("1") == run_proc("2")
