import csv
import io
import subprocess
import sys

import pytest

from ftem.cli import main
from ftem.constructions import parse_generator
from ftem.experiments import ExperimentSpec, build, run
from ftem.graph import WeightedGraph, format_graph
from ftem.serialize import dumps

GEN = "gnp:n=12:p=0.5:seed=1:w=distinct"


def test_build_em5_with_verification(capsys):
    assert main(["build", "--gen", GEN, "--algo", "em5", "--f", "1", "--verify"]) == 0
    assert capsys.readouterr().out.strip().endswith("PASS")


def test_build_writes_emulator(tmp_path):
    out = tmp_path / "h.txt"
    assert main(["build", "--gen", GEN, "--algo", "emk", "--k", "2", "--f", "1",
                 "--seed", "4", "--out", str(out)]) == 0
    spec = ExperimentSpec(GEN, "emk", 1, k=2, seed=4)
    assert out.read_text() == dumps(build(spec))


def test_build_from_file(tmp_path, capsys):
    g = tmp_path / "g.txt"
    g.write_text(format_graph(parse_generator("gnp:n=12:p=0.5:seed=1")))
    assert main(["build", "--graph", str(g), "--algo", "add2", "--f", "1", "--verify"]) == 0
    # additive emulators are for unweighted graphs only
    g.write_text(format_graph(parse_generator(GEN)))
    assert main(["build", "--graph", str(g), "--algo", "add2", "--f", "1"]) == 2
    assert "unweighted" in capsys.readouterr().err


def test_unknown_algorithm_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["build", "--gen", GEN, "--algo", "bogus", "--f", "1"])
    assert info.value.code == 2
    assert main(["sweep", "--gen", GEN, "--algo", "bogus"]) == 2


def test_bad_generator_is_usage_error(capsys):
    assert main(["build", "--gen", "nope:3", "--algo", "em5", "--f", "1"]) == 2
    assert "error" in capsys.readouterr().err


def test_budget_exit_code(capsys):
    code = main(["build", "--gen", "gnp:n=40:p=0.2:seed=0", "--algo", "spanner",
                 "--f", "3", "--verify", "--budget", "1000"])
    assert code == 3
    assert "budget" in capsys.readouterr().err


def test_sweep_single_cell(capsys):
    assert main(["sweep", "--gen", "gnp:n=10:p=0.5", "--algo", "em5", "--f", "1"]) == 0
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert len(rows) == 1 and rows[0]["verified"] == "skip"


def test_sweep_grid_order(tmp_path):
    out = tmp_path / "s.csv"
    assert main(["sweep", "--gen", "gnp:n=10:p=0.5", "--algo", "spanner,emk", "--f", "1,2",
                 "--seeds", "0-2", "--verify", "--out", str(out)]) == 0
    rows = list(csv.DictReader(io.StringIO(out.read_text())))
    assert len(rows) == 3 * 2 * 2
    assert [r["seed"] for r in rows[:4]] == ["0"] * 4
    assert [r["algorithm"] for r in rows[:2]] == ["spanner", "emk"]
    assert all(r["verified"] == "pass" for r in rows)
    assert all(int(r["total_edges"]) == int(r["spanner_edges"]) + int(r["emulator_edges"])
               for r in rows)


def test_sweep_parallel_matches_serial(tmp_path):
    args = ["sweep", "--gen", "gnp:n=10:p=0.5", "--algo", "emk", "--f", "1", "--seeds", "0-3"]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--jobs", "2", "--out", str(b)]) == 0

    def strip(path):
        return [{k: v for k, v in r.items() if k != "ms"}
                for r in csv.DictReader(io.StringIO(path.read_text()))]

    assert strip(a) == strip(b)


def _files(tmp_path, G, H_text):
    g, h = tmp_path / "g.txt", tmp_path / "h.txt"
    g.write_text(format_graph(G))
    h.write_text(H_text)
    return str(g), str(h)


def test_verify_identity_passes(tmp_path, capsys):
    G = parse_generator("gnp:n=8:p=0.5:seed=2")
    from ftem.graph import EmulatorGraph
    g, h = _files(tmp_path, G, dumps(EmulatorGraph.from_graph(G)))
    assert main(["verify", "--graph", g, "--emulator", h, "--f", "2", "--bound", "1"]) == 0
    assert capsys.readouterr().out.strip().endswith("PASS")


def test_verify_tree_of_cycle_fails(tmp_path, capsys):
    G = WeightedGraph(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)])
    from ftem.graph import EmulatorGraph
    g, h = _files(tmp_path, G, dumps(EmulatorGraph(G, spanner_edges=list(G.edges[:3]))))
    assert main(["verify", "--graph", g, "--emulator", h, "--f", "1", "--bound", "3"]) == 1
    assert main(["verify", "--graph", g, "--emulator", h, "--f", "0", "--bound", "3",
                 "--mode", "additive"]) == 0


def test_verify_malformed_graph(tmp_path, capsys):
    g, h = _files(tmp_path, WeightedGraph(2, [(0, 1, 1)]), "")
    (tmp_path / "g.txt").write_text("3\n0 1 1\n0 x\n")
    assert main(["verify", "--graph", g, "--emulator", h, "--f", "1", "--bound", "3"]) == 2
    assert "line 3" in capsys.readouterr().err


def test_gen_roundtrip(capsys):
    assert main(["gen", "--gen", "pg2:2"]) == 0
    text = capsys.readouterr().out
    assert text.splitlines()[0] == "14" and len(text.splitlines()) == 22


def test_cli_matches_library(tmp_path):
    spec = ExperimentSpec(GEN, "emk", 2, k=3, seed=7)
    out = tmp_path / "h.txt"
    assert main(["build", "--gen", GEN, "--algo", "emk", "--f", "2", "--seed", "7",
                 "--out", str(out)]) == 0
    assert out.read_text() == dumps(run(spec).emulator)


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ftem.cli", "build", "--gen", GEN,
                           "--algo", "spanner", "--f", "1", "--verify"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "PASS" in proc.stdout
