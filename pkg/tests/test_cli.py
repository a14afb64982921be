import csv
import io
import json

import pytest

from antiramsey.cli import main
from antiramsey.graph import complete_graph, complete_multipartite
from antiramsey.io import read_graph, write_graph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def k4(tmp_path):
    path = tmp_path / "k4.txt"
    write_graph(complete_graph(4), path)
    return str(path)


@pytest.fixture
def rainbow_k4(tmp_path):
    path = tmp_path / "rk4.txt"
    write_graph(complete_graph(4).with_colors(range(6)), path)
    return str(path)


def test_formula_complete(capsys):
    code, out, _ = run(capsys, "formula", "complete", "-n", "6", "-t", "1")
    assert code == 0
    assert json.loads(out) == {"value": 7, "branch": ["n>=2t+2"], "n": 6, "t": 1}


def test_formula_bipartite_orders_sides(capsys):
    _, a, _ = run(capsys, "formula", "bipartite", "-p", "3", "-q", "5", "-t", "1")
    _, b, _ = run(capsys, "formula", "bipartite", "-p", "5", "-q", "3", "-t", "1")
    assert json.loads(a)["value"] == json.loads(b)["value"] == 10


def test_formula_multipartite(capsys):
    code, out, _ = run(capsys, "formula", "multipartite", "--parts", "2,2,2", "-t", "1")
    data = json.loads(out)
    assert code == 0 and data["value"] == 6
    assert data["f"] == [12, 8, 5, 3, 1, 0] and data["concave"]


def test_formula_sweep_csv(capsys):
    code, out, _ = run(capsys, "formula", "sweep", "--parts", "4,4", "--t-range", "1..3", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert [(r["t"], r["value"]) for r in rows] == [("1", "10"), ("2", "12"), ("3", "16")]


def test_formula_usage_errors(capsys):
    assert run(capsys, "formula", "complete")[0] == 2
    assert run(capsys, "formula", "multipartite", "--parts", "2,x")[0] == 2
    assert run(capsys, "formula", "sweep", "--parts", "2,2", "--t-range", "1-3")[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_r_general(capsys, k4):
    code, out, _ = run(capsys, "r-general", k4, "-t", "1", "--witness")
    data = json.loads(out)
    assert code == 0
    assert (data["value"], data["branch"], data["witness"]) == (2, "PartitionMax", [[0, 1], [2], [3]])


def test_r_general_text(capsys, k4):
    _, out, _ = run(capsys, "r-general", k4, "-t", "2", "--format", "text")
    assert out.strip() == "r(G,2) = 4  [PartitionMax]"


def test_r_general_cap(capsys, k4):
    code, _, err = run(capsys, "r-general", k4, "--max-n-exhaustive", "3")
    assert code == 3 and "cap" in err


def test_config_file(capsys, tmp_path, k4):
    cfg = tmp_path / "rt.toml"
    cfg.write_text("max_n_exhaustive = 3\n")
    assert run(capsys, "r-general", k4, "--config", str(cfg))[0] == 3
    # the flag wins over the file
    assert run(capsys, "r-general", k4, "--config", str(cfg), "--max-n-exhaustive", "4")[0] == 0
    cfg.write_text("colour = 1\n")
    code, _, err = run(capsys, "r-general", k4, "--config", str(cfg))
    assert code == 2 and "unknown config key" in err


def test_check_modes(capsys, rainbow_k4, tmp_path):
    code, out, _ = run(capsys, "check", rainbow_k4, "-t", "2")
    assert code == 0 and json.loads(out)["found"]
    code, out, _ = run(capsys, "check", rainbow_k4, "--mode", "color-disjoint", "--search")
    data = json.loads(out)
    assert code == 0 and data["found"] and data["search_found"]
    forests = tmp_path / "f.txt"
    forests.write_text("0\n")
    code, out, _ = run(capsys, "check", rainbow_k4, "--mode", "extension", "--forests", str(forests))
    assert json.loads(out)["certificate"]["outcome"] == "Extendable"
    assert run(capsys, "check", rainbow_k4, "-t", "2", "--mode", "extension", "--forests", str(forests))[0] == 2


def test_check_blocked(capsys, tmp_path):
    g = tmp_path / "g.txt"
    g.write_text("4 6 1\n" + "".join(f"{u} {v} 0\n" for u, v in complete_graph(4).pairs()))
    _, out, _ = run(capsys, "check", str(g), "--mode", "color-disjoint")
    assert json.loads(out)["blocking_partition"] == [[0], [1], [2], [3]]


def test_check_needs_colors(capsys, k4):
    assert run(capsys, "check", k4)[0] == 2


def test_check_budget(capsys, tmp_path):
    g = tmp_path / "k7.txt"
    write_graph(complete_graph(7).with_colors([i % 6 for i in range(21)]), g)
    assert run(capsys, "check", str(g), "-t", "3", "--budget", "5")[0] == 3


def test_extremal(capsys, tmp_path, k4):
    out_path = tmp_path / "c.txt"
    code, out, _ = run(capsys, "extremal", k4, "-t", "1", "--certify", "-o", str(out_path))
    data = json.loads(out)
    assert code == 0 and data["colors"] == 2 and data["avoiding"]
    assert read_graph(out_path).num_colors == 2


def test_extremal_given_partition(capsys, tmp_path):
    g = tmp_path / "k6.txt"
    write_graph(complete_graph(6), g)
    _, out, _ = run(capsys, "extremal", str(g), "--partition", "0,1,2,3|4|5")
    assert json.loads(out)["colors"] == 7
    assert run(capsys, "extremal", str(g), "--partition", "0,1,2|3,4,5")[0] == 2


def test_oracle(capsys, k4, tmp_path):
    code, out, _ = run(capsys, "oracle", k4, "-t", "1")
    assert code == 0 and json.loads(out)["value"] == 2
    g = tmp_path / "k5.txt"
    write_graph(complete_graph(5), g)
    assert run(capsys, "oracle", str(g), "--max-edges", "9")[0] == 3


def test_stats(capsys, tmp_path):
    g = tmp_path / "k3.txt"
    g.write_text("3 3 1\n0 1 0\n0 2 0\n1 2 0\n")
    _, out, _ = run(capsys, "stats", str(g), "--partition", "0,1|2")
    data = json.loads(out)
    assert (data["eta"], data["xi"], data["crossing_colors"]) == (0, 1, 1)
    write_graph(complete_multipartite((2, 2)), g)
    _, out, _ = run(capsys, "stats", str(g), "--partition", "0,1|2,3")
    assert json.loads(out)["crossing_edges"] == 4


def test_parse_error_has_line(capsys, tmp_path):
    g = tmp_path / "bad.txt"
    g.write_text("3 2 0\n0 1\n2 2\n")
    code, _, err = run(capsys, "r-general", str(g))
    assert code == 2 and f"{g}:3:" in err and "loop" in err


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "oracle", str(tmp_path / "nope.txt"))[0] == 2


def test_verify_deterministic(capsys):
    argv = ("verify", "--max-n", "3", "--seed", "7", "--random-colorings", "10", "--concavity-n", "8")
    code, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert code == 0 and a == b
    assert json.loads(a)["ok"]


def test_verify_rejects_large_n(capsys):
    assert run(capsys, "verify", "--max-n", "20")[0] == 2
