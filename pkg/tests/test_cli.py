import json
import subprocess
import sys

import pytest

from potram.cli import main, parse_graph
from potram.errors import InputError
from potram.formats import from_graph6, to_graph6
from potram.graph import Graph, complete_graph, cycle_graph, path_graph, star_graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    data = json.loads(out)
    # the emitted report re-serializes byte-identically
    assert json.dumps(data, indent=2) + "\n" == out
    return code, data


def test_parse_graph_names():
    assert parse_graph("K4") == complete_graph(4)
    assert parse_graph("P6") == path_graph(6)
    assert parse_graph("S5") == star_graph(5)
    assert parse_graph("C5") == cycle_graph(5)
    assert parse_graph("T8:0").n == 8
    assert parse_graph(to_graph6(cycle_graph(7))) == cycle_graph(7)
    with pytest.raises(InputError):
        parse_graph("T8:23")
    with pytest.raises(InputError):
        parse_graph("K0")


def test_graphic(capsys):
    assert run(capsys, "graphic", "2,2,2")[:2] == (0, "graphic\n")
    assert run(capsys, "graphic", "3,3,1,1")[0] == 1
    code, _, err = run(capsys, "graphic", "2,x")
    assert code == 2 and "x" in err


def test_realize_and_complement(capsys):
    code, data = run_json(capsys, "realize", "2,2,2")
    assert code == 0 and from_graph6(data["graph6"]) == complete_graph(3)
    code, out, _ = run(capsys, "complement", "3,1,1,1")
    assert code == 0 and out.strip() == "2,2,2,0"
    code, out, _ = run(capsys, "complement", "--graph", "K3")
    assert from_graph6(out.strip()).m == 0
    assert run(capsys, "realize", "3,3,1,1")[0] == 1


def test_potential(capsys):
    code, data = run_json(capsys, "potential", "2,2,2,2,2,2", "K3")
    assert code == 0
    g = from_graph6(data["witness"]["graph6"])
    emb = data["witness"]["embedding"]
    assert all(g.has_edge(emb[a], emb[b]) for a, b in complete_graph(3).edges)
    code, out, _ = run(capsys, "potential", "1,1,1,1", "P3")
    assert code == 1 and out.strip() == "NO WITNESS"
    assert run(capsys, "potential", "2,2,2,2,2,2", "K3", "--no-fast")[0] == 0
    assert run(capsys, "potential", "3,2,2,2,1", "P3", "--check", "top-degree")[0] == 0
    assert run(capsys, "potential", "2,2,2,2,2,2", "--check", "clique-sufficient", "-k", "3")[0] == 0
    assert run(capsys, "potential", "2,2,2,2", "--check", "tree-sufficient", "-t", "4")[0] == 1
    assert run(capsys, "potential", "3,1,1,1", "--check", "star", "-t", "4")[0] == 0
    assert run(capsys, "potential", "6,6,6,6,4,4,4", "--check", "degree-bounds", "-k", "3", "-t", "6")[0] == 0
    assert run(capsys, "potential", "2,2,2", "--check", "star")[0] == 2
    assert run(capsys, "potential", "3,3,1,1", "K2")[0] == 2


def test_pack(capsys):
    m3 = to_graph6(Graph(6, [(0, 1), (2, 3), (4, 5)]))
    code, out, _ = run(capsys, "pack", m3, "P6")
    assert code == 0 and len(out.strip().splitlines()) == 6
    code, data = run_json(capsys, "pack", m3, "P6", "--method", "exact")
    assert code == 0 and sorted(data["packing"]) == list(range(6))
    code, out, _ = run(capsys, "pack", m3, "S6")
    assert code == 1 and out.strip() == "NO PACKING"
    assert run(capsys, "pack", m3, "S6", "--method", "linkswap")[0] == 2
    assert run(capsys, "pack", "K3", "P4")[0] == 2


def test_rpot(capsys):
    code, data = run_json(capsys, "rpot", "--h1", "K3", "--h2", "K3", "--nmax", "8")
    assert code == 0 and data["minimal_n"] == 6 and data["monotone"]
    assert data["per_n"][2] == {"n": 5, "holds": False, "counterexample": [2, 2, 2, 2, 2]}
    code, _, _ = run(capsys, "rpot", "--h1", "K4", "--h2", "K4", "--nmax", "7")
    assert code == 1
    assert run(capsys, "rpot", "--h1", "K3", "--h2", "K3", "--nmax", "11")[0] == 3


def test_rpot_jobs_deterministic(capsys):
    a = run(capsys, "rpot", "--h1", "K4", "--h2", "K3", "--nmax", "7", "--format", "json")[1]
    b = run(capsys, "rpot", "--h1", "K4", "--h2", "K3", "--nmax", "7", "--format", "json", "--jobs", "2")[1]
    assert a == b


def test_witness(capsys):
    code, data = run_json(capsys, "witness", "4", "5")
    assert code == 0 and data["sequence"] == [5, 5, 2, 2, 2, 2]
    code, data = run_json(capsys, "witness", "6", "--kind", "star")
    assert code == 0 and data["packs"] is False
    code, data = run_json(capsys, "witness", "2", "3", "--kind", "spider")
    assert code == 0 and data["packs"] is False
    assert run(capsys, "witness", "4", "--kind", "spider")[0] == 2
    assert run(capsys, "witness", "5", "--kind", "star")[0] == 2


def test_verify(capsys):
    code, data = run_json(capsys, "verify", "forest-packing", "--nmax", "6")
    assert code == 0 and data["passed"]
    code, _, _ = run(capsys, "verify", "clique-clique", "--node-budget", "1")
    assert code == 3


def test_enumerate_streams(capsys):
    code, out, _ = run(capsys, "enumerate", "sequences", "4")
    assert code == 0 and len(out.splitlines()) == 11
    assert out.splitlines()[0] == "3,3,3,3"
    code, out, _ = run(capsys, "enumerate", "trees", "8")
    assert len(out.splitlines()) == 23
    code, data = run_json(capsys, "enumerate", "graphs", "4")
    assert len(data["items"]) == 11
    assert run(capsys, "enumerate", "graphs", "20")[0] == 3


def test_bad_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "potram.cli", "graphic", "2,2,2"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "graphic"
