from __future__ import annotations

import json
import subprocess
import sys

import pytest

from aggsem.bench import paper_graph
from aggsem.cli import main
from aggsem.engine import AggregativeSemantics, evaluate
from aggsem.graph import serialize_qbaf


@pytest.fixture
def fig1_file(tmp_path):
    p = tmp_path / "fig1.json"
    p.write_text(serialize_qbaf(paper_graph("fig1")))
    return str(p)


@pytest.fixture
def cyclic_file(tmp_path):
    p = tmp_path / "cyclic.json"
    doc = {
        "arguments": [{"id": "a", "weight": 0.5}, {"id": "b", "weight": 0.5}],
        "attacks": [["a", "b"], ["b", "a"]],
        "supports": [],
    }
    p.write_text(json.dumps(doc))
    return str(p)


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _row(out: str, arg: str) -> list[str]:
    return next(line.split(",") for line in out.splitlines() if line.startswith(arg + ","))


@pytest.mark.parametrize(
    "flags, expected",
    [
        (["--semantics", "dfquad"], "0.47"),
        (["--semantics", "ebs"], "0.50"),
        (["--phi-r", "tnorm_product", "--phi-s", "tconorm_drastic", "--phi-f", "example3"], "0.73"),
    ],
)
def test_eval_rounded(capsys, fig1_file, flags, expected):
    code, out, _ = _run(capsys, "eval", fig1_file, *flags, "--round", "2")
    assert code == 0
    assert _row(out, "a")[-1] == expected


def test_eval_unrounded_is_repr(capsys, fig1_file):
    code, out, _ = _run(capsys, "eval", fig1_file, "--phi-r", "avg_am", "--phi-s", "avg_am", "--phi-f", "avg_am")
    assert code == 0
    s = AggregativeSemantics.from_names("avg_am", "avg_am", "avg_am")
    assert float(_row(out, "a")[-1]) == evaluate(s, paper_graph("fig1"))["a"]


def test_validate_passes_cycle_but_eval_rejects_it(capsys, cyclic_file):
    code, out, _ = _run(capsys, "validate", cyclic_file)
    assert code == 0
    assert out.startswith("valid")
    code, _, err = _run(capsys, "eval", cyclic_file, "--semantics", "qe")
    assert code == 1
    assert "a -> b -> a" in err


def test_validate_reports_bad_weight(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"arguments": [{"id": "z", "weight": 1.5}], "attacks": [], "supports": []}))
    code, _, err = _run(capsys, "validate", str(p))
    assert code == 1
    assert "'z'" in err


@pytest.mark.parametrize(
    "argv, fragment",
    [
        ([], "command"),
        (["eval", "FIG1", "--phi-r", "avg_am"], "--phi-s"),
        (["eval", "FIG1", "--phi-r", "median", "--phi-s", "max", "--phi-f", "max"], "--phi-r"),
        (["eval", "FIG1", "--semantics", "qe", "--phi-r", "max"], "--semantics"),
        (["principles", "--semantics", "hbs"], "--semantics"),
        (["graphs", "--id", "fig99"], "--id"),
        (["postulates", "--agg", "median"], "--agg"),
        (["eval", "/nonexistent/file.json", "--semantics", "qe"], "cannot read"),
    ],
)
def test_usage_errors_exit_two(capsys, fig1_file, argv, fragment):
    argv = [fig1_file if a == "FIG1" else a for a in argv]
    code, _, err = _run(capsys, *argv)
    assert code == 2
    assert fragment in err


def test_graphs_pipe_matches_in_process():
    s = AggregativeSemantics.from_names("avg_am", "max", "tnorm_product")
    dump = subprocess.run(
        [sys.executable, "-m", "aggsem", "graphs", "--id", "fig6_final"], capture_output=True, text=True, check=True
    )
    out = subprocess.run(
        [sys.executable, "-m", "aggsem", "eval", "-", "--phi-r", "avg_am", "--phi-s", "max", "--phi-f", "tnorm_product"],
        input=dump.stdout,
        capture_output=True,
        text=True,
        check=True,
    )
    d = evaluate(s, paper_graph("fig6_final"))
    lines = out.stdout.splitlines()[1:]
    assert len(lines) == 23
    for line in lines:
        arg, _, _, _, deg = line.split(",")
        assert float(deg) == d[arg]


def test_graphs_list(capsys):
    code, out, _ = _run(capsys, "graphs", "--list")
    assert code == 0
    assert "fig6_final" in out.split()


def test_eval_is_pure(capsys, fig1_file):
    argv = ["eval", fig1_file, "--semantics", "dfquad"]
    assert _run(capsys, *argv) == _run(capsys, *argv)


def test_principles_json_and_seed_env(capsys, monkeypatch):
    argv = ["principles", "--phi-r", "tnorm_product", "--phi-s", "avg_am", "--phi-f", "avg_am", "--principle", "A6", "--trials", "50"]
    monkeypatch.setenv("QBAF_SEED", "11")
    code, out, _ = _run(capsys, *argv)
    assert code == 0
    data = json.loads(out)
    assert data["seed"] == 11
    assert [v["principle"] for v in data["verdicts"]] == ["A6"]
    assert data["verdicts"][0]["status"] == "violated"
    # An explicit flag wins over the environment.
    code, out, _ = _run(capsys, *argv, "--seed", "3")
    assert json.loads(out)["seed"] == 3


def test_bad_seed_env(capsys, monkeypatch):
    monkeypatch.setenv("QBAF_SEED", "abc")
    code, _, err = _run(capsys, "postulates", "--agg", "min")
    assert code == 2
    assert "QBAF_SEED" in err


def test_postulates_matrix(capsys):
    code, out, _ = _run(capsys, "postulates", "--agg", "min", "--agg", "max", "--seed", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("aggregator,P1,")
    assert [line.split(",")[0] for line in lines[1:]] == ["min", "max"]


def test_sweep_writes_files(capsys, tmp_path):
    code, out, _ = _run(capsys, "sweep", "--out", str(tmp_path))
    assert code == 0
    summary = json.loads(out)
    assert summary["semantics"] == 515
    assert sum(summary["histogram"]["counts"]) == 515
    for name in ("sweep.csv", "histogram.csv", "histogram.svg", "table4_report.csv"):
        assert (tmp_path / name).exists()


def test_table4_exit_reflects_rows(capsys):
    code, out, err = _run(capsys, "table4")
    assert out.splitlines()[0] == "row,column,computed,displayed,rounded,paper_value,pass"
    # S7's printed pi_r(a) disagrees with the computed 0.4375.
    assert code == 1
    assert "S7" in err


def test_examples_command(capsys):
    code, out, _ = _run(capsys, "examples")
    assert code == 0
    assert "fig8 deg(a)" in out
