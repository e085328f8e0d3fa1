from __future__ import annotations

import io
import json
import random

from unicover.cli import main
from treegen import cycle_graph, random_graph

import unicover


def write(path, text):
    path.write_text(text, encoding="utf-8")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_single_edge_pair(tmp_path, capsys):
    trees = write(tmp_path / "t.txt", "(())\n(())\n")
    code, out, _ = run(capsys, "check", trees)
    doc = json.loads(out)
    assert code == 0
    assert doc == {"graphical": True, "h": 1, "failures": []}


def test_check_unbalanced_pair_fails_with_named_type(tmp_path, capsys):
    trees = write(tmp_path / "t.txt", "(())\n((()))\n")
    code, out, _ = run(capsys, "check", trees, "--depth", "2")
    doc = json.loads(out)
    assert code == 1
    assert doc["graphical"] is False
    kinds = {(f["kind"], json.dumps(f["type"], sort_keys=True)) for f in doc["failures"]}
    assert ("UnbalancedPair", json.dumps({"r": "()", "s": "(())"}, sort_keys=True)) in kinds


def test_check_cycle_collection(tmp_path, capsys):
    trees = write(tmp_path / "t.txt", "((())(()))\n" * 4)
    code, out, _ = run(capsys, "check", trees)
    assert code == 0
    assert json.loads(out)["h"] == 2


def test_check_explain_includes_table(tmp_path, capsys):
    trees = write(tmp_path / "t.txt", "(())\n(())\n")
    code, out, _ = run(capsys, "check", trees, "--explain")
    doc = json.loads(out)
    assert code == 0
    assert doc["table"]["n"] == 2
    assert doc["table"]["types"][0]["class"] == "diag"


def test_check_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("(())\n(())\n"))
    code, out, _ = run(capsys, "check", "-")
    assert code == 0 and json.loads(out)["graphical"]


def test_check_parse_error_names_line(tmp_path, capsys):
    trees = write(tmp_path / "t.txt", "(())\n(()\n")
    code, _, err = run(capsys, "check", trees)
    assert code == 2
    assert "line 2" in err


def test_check_depth_too_small_names_line(tmp_path, capsys):
    trees = write(tmp_path / "t.txt", "(())\n((()))\n")
    code, _, err = run(capsys, "check", trees, "--depth", "1")
    assert code == 2
    assert "line(s) [2]" in err


def test_realize_writes_edge_list(tmp_path, capsys):
    trees = write(tmp_path / "t.txt", "(())\n(())\n")
    out_path = tmp_path / "g.txt"
    code, _, _ = run(capsys, "realize", trees, "-o", str(out_path))
    assert code == 0
    assert out_path.read_text() == "n=2\n0 1\n"


def test_realize_with_verify_and_dot(tmp_path, capsys):
    trees = write(tmp_path / "t.txt", "((())(()))\n" * 4)
    out_path = tmp_path / "g.dot"
    code, _, _ = run(capsys, "realize", trees, "-o", str(out_path), "--verify", "--format", "dot")
    assert code == 0
    assert "graph G {" in out_path.read_text()


def test_realize_nongraphical_writes_nothing(tmp_path, capsys):
    trees = write(tmp_path / "t.txt", "(())\n((()))\n")
    out_path = tmp_path / "g.txt"
    code, out, err = run(capsys, "realize", trees, "-o", str(out_path), "--depth", "2")
    assert code == 1
    assert not out_path.exists()
    assert "not graphical" in err
    assert json.loads(out)["graphical"] is False


def test_neighborhoods_of_single_edge(tmp_path, capsys):
    graph = write(tmp_path / "g.txt", "n=2\n0 1\n")
    code, out, _ = run(capsys, "neighborhoods", graph, "--depth", "1")
    assert code == 0
    assert out == "(())\n(())\n"


def test_neighborhoods_of_empty_graph(tmp_path, capsys):
    graph = write(tmp_path / "g.txt", "n=3\n")
    code, out, _ = run(capsys, "neighborhoods", graph, "--depth", "2")
    assert code == 0
    assert out == "()\n()\n()\n"


def test_neighborhoods_rejects_malformed_graph(tmp_path, capsys):
    graph = write(tmp_path / "g.txt", "n=2\n0 0\n")
    code, _, err = run(capsys, "neighborhoods", graph, "--depth", "1")
    assert code == 2
    assert "loop" in err


def test_verify_match_and_mismatch(tmp_path, capsys):
    graph = write(tmp_path / "g.txt", "n=2\n0 1\n")
    good = write(tmp_path / "good.txt", "(())\n(())\n")
    bad = write(tmp_path / "bad.txt", "(())\n(()())\n")
    assert run(capsys, "verify", graph, good)[0] == 0
    code, _, err = run(capsys, "verify", graph, bad)
    assert code == 1
    assert "vertex 1" in err


def test_verify_size_mismatch_is_input_error(tmp_path, capsys):
    graph = write(tmp_path / "g.txt", "n=3\n0 1\n")
    trees = write(tmp_path / "t.txt", "(())\n(())\n")
    assert run(capsys, "verify", graph, trees)[0] == 2


def test_selftest_small(capsys):
    code, out, _ = run(capsys, "selftest", "--max-n", "2", "--depth", "2", "--mutants-per-case", "2")
    doc = json.loads(out)
    assert code == 0
    assert doc["disagreements_total"] == 0
    assert doc["cases_total"] == sum(r["cases_total"] for r in doc["runs"])


def test_composition_law(tmp_path, capsys):
    # neighborhoods | check | realize --verify | verify must all succeed
    rng = random.Random(2)
    for graph in (cycle_graph(5), random_graph(rng, 8, 0.3)):
        g_path = tmp_path / "g.txt"
        with open(g_path, "w") as handle:
            unicover.write_graph(graph, handle)
        t_path = tmp_path / "t.txt"
        code, out, _ = run(capsys, "neighborhoods", str(g_path), "--depth", "2", "-o", str(t_path))
        assert code == 0
        assert run(capsys, "check", str(t_path))[0] == 0
        r_path = tmp_path / "r.txt"
        assert run(capsys, "realize", str(t_path), "-o", str(r_path), "--verify")[0] == 0
        assert run(capsys, "verify", str(r_path), str(t_path))[0] == 0
        assert run(capsys, "verify", str(g_path), str(t_path), "--depth", "2")[0] == 0


def test_outputs_are_deterministic(tmp_path, capsys):
    trees = write(tmp_path / "t.txt", "((())(()))\n" * 4)
    first = run(capsys, "check", trees, "--explain")
    second = run(capsys, "check", trees, "--explain")
    assert first == second
