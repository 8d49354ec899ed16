import csv
from pathlib import Path

import pytest

import main
from cuts.io import parse_cut, parse_demand, read_text
from graph.edgelist import read_graph, write_graph
from sweep.plan import read_plan
from utils.errors import ContractViolation


@pytest.fixture
def c4_file(tmp_path, c4):
    path = tmp_path / "c4.txt"
    write_graph(c4, str(path))
    return str(path)


@pytest.fixture
def cut_file(tmp_path):
    path = tmp_path / "c4.cut"
    path.write_text("# h 2\nc 0 1 2/2\n")
    return str(path)


def _write(tmp_path, name, text) -> str:
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_build_alternating_script_on_c4(tmp_path, capsys):
    prefix = str(tmp_path / "c4")
    code = main.main(['build', '--gen', 'cycle:4', '--t', '3', '--algo', 'par', '--strategy', 'alternating', '--out', prefix])
    assert code == main.EXIT_OK
    assert read_graph(prefix + ".txt").edge_count == 4
    with open(prefix + ".report.csv", newline='') as f:
        row = next(csv.DictReader(f))
    assert row['girth'] == '4'
    assert row['rounds'] == '2'
    assert "certificate accepted" in capsys.readouterr().out


def test_build_accepts_the_scripted_cycle_name(tmp_path, capsys):
    prefix = str(tmp_path / "c4")
    code = main.main(['build', '--gen', 'cycle:4', '--t', '3', '--algo', 'par', '--strategy', 'scripted-fig2', '--out', prefix])
    assert code == main.EXIT_OK
    assert read_graph(prefix + ".txt").edge_count == 4
    with open(prefix + ".report.csv", newline='') as f:
        row = next(csv.DictReader(f))
    assert row['girth'] == '4'
    assert row['strategy'] == 'scripted-fig2'


def test_sequential_build_on_c4_keeps_a_tree(tmp_path):
    prefix = str(tmp_path / "seq")
    assert main.main(['build', '--gen', 'cycle:4', '--t', '3', '--algo', 'seq', '--out', prefix]) == main.EXIT_OK
    with open(prefix + ".report.csv", newline='') as f:
        row = next(csv.DictReader(f))
    assert row['m_spanner'] == '3'
    assert row['girth'] == 'inf'
    assert row['strategy'] == 'sequential'


def test_build_hypercube_by_dimensions():
    assert main.main(['build', '--gen', 'hypercube:4', '--t', '3', '--strategy', 'dimensions']) == main.EXIT_OK


def test_build_bucketed_on_weighted_graph(tmp_path, capsys):
    graph = _write(tmp_path, "w.txt", "p 3 3\ne 0 1 1\ne 1 2 2\ne 0 2 4\n")
    assert main.main(['build', '--graph', graph, '--t', '2', '--algo', 'bucketed']) == main.EXIT_OK
    assert "Verified as a 4-spanner" in capsys.readouterr().out


def test_build_needs_a_graph_source(capsys):
    assert main.main(['build', '--t', '3']) == main.EXIT_INPUT


def test_verify_stretch(tmp_path, c4_file, capsys):
    path = _write(tmp_path, "path.txt", "p 4 3\ne 0 1\ne 1 2\ne 2 3\n")
    opposite = _write(tmp_path, "opp.txt", "p 4 2\ne 0 1\ne 2 3\n")
    assert main.main(['verify', '--graph', c4_file, '--spanner', path, '--t', '3']) == main.EXIT_OK
    assert main.main(['verify', '--graph', c4_file, '--spanner', path, '--t', '2']) == main.EXIT_VERIFY_FAILED
    assert main.main(['verify', '--graph', c4_file, '--spanner', opposite, '--t', '3']) == main.EXIT_VERIFY_FAILED
    assert "Not a 3-spanner" in capsys.readouterr().out


def test_verify_certificates(tmp_path, c4_file):
    prefix = str(tmp_path / "c4")
    main.main(['build', '--graph', c4_file, '--t', '3', '--strategy', 'alternating', '--out', prefix])
    args = ['verify', '--graph', c4_file, '--spanner', prefix + ".txt", '--t', '3']
    assert main.main(args + ['--certificate', prefix + ".cert"]) == main.EXIT_OK

    tampered = _write(tmp_path, "bad.cert", "# n 4\nr 1 : 0-1\nr 2 : 1-2\nr 3 : 2-3\nr 4 : 0-3\n")
    assert main.main(args + ['--certificate', tampered]) == main.EXIT_VERIFY_FAILED

    partial = _write(tmp_path, "partial.cert", "# n 4\nr 1 : 0-1 2-3\n")
    assert main.main(args + ['--certificate', partial]) == main.EXIT_VERIFY_FAILED


def test_stats_on_k4(capsys):
    assert main.main(['stats', '--gen', 'complete:4']) == main.EXIT_OK
    out = capsys.readouterr().out
    assert "girth: 3" in out
    assert "degeneracy: 3" in out
    assert "arboricity: 2" in out


def test_stats_on_a_tree_reports_infinite_girth(tmp_path, capsys):
    tree = _write(tmp_path, "tree.txt", "p 3 2\ne 0 1\ne 1 2\n")
    assert main.main(['stats', '--graph', tree]) == main.EXIT_OK
    assert "girth: inf" in capsys.readouterr().out


def test_bad_input_exits_with_two(tmp_path, capsys):
    broken = _write(tmp_path, "broken.txt", "p 3 1\ne 0 5\n")
    assert main.main(['stats', '--graph', broken]) == main.EXIT_INPUT
    assert "line 2" in capsys.readouterr().out
    assert main.main(['stats', '--graph', str(tmp_path / "missing.txt")]) == main.EXIT_INPUT
    assert main.main(['stats', '--gen', 'moebius:3']) == main.EXIT_INPUT


def test_route_check(tmp_path, capsys):
    flow_out = str(tmp_path / "flow.txt")
    args = ['route-check', '--gen', 'cycle:4', '--matching', '0-1,2-3']
    assert main.main(args + ['--t', '1', '--cap', '1', '--flow-out', flow_out]) == main.EXIT_OK
    assert open(flow_out).read() == "f 1 : 0 1\nf 1 : 2 3\n"
    assert main.main(args + ['--t', '3', '--cap', '1/2']) == main.EXIT_VERIFY_FAILED
    assert "Not routable" in capsys.readouterr().out
    assert main.main(['route-check', '--gen', 'cycle:4', '--matching', '0:1', '--t', '3', '--cap', '1']) == main.EXIT_INPUT


def test_internal_failures_exit_with_three(monkeypatch):
    def broken(*args, **kwargs):
        raise ContractViolation("routed flow does not match the requested demand")

    monkeypatch.setattr(main, 'route_matching', broken)
    code = main.main(['route-check', '--gen', 'cycle:4', '--matching', '0-1', '--t', '3', '--cap', '1'])
    assert code == main.EXIT_INTERNAL


def test_cut_sparsity_command(c4_file, cut_file, capsys):
    assert main.main(['cut', 'sparsity', '--graph', c4_file, '--cut', cut_file, '--h', '1', '--s', '2']) == main.EXIT_OK
    assert "sparsity: 1/2" in capsys.readouterr().out


def test_cut_apply_command(tmp_path, c4_file, cut_file, capsys):
    out = str(tmp_path / "cut.txt")
    assert main.main(['cut', 'apply', '--graph', c4_file, '--cut', cut_file, '--out', out]) == main.EXIT_OK
    assert read_graph(out).edge_count == 3
    assert main.main(['cut', 'apply', '--graph', c4_file, '--cut', cut_file, '--mode', 'lengthen', '--out', out]) == main.EXIT_OK
    assert read_graph(out).edges[0] == (0, 1, 3)


def test_cut_sep_command(tmp_path, c4_file, cut_file, capsys):
    demand = _write(tmp_path, "d.txt", "d 0 1 1\nd 1 2 1\n")
    assert main.main(['cut', 'sep', '--graph', c4_file, '--cut', cut_file, '--demand', demand, '--h', '2']) == main.EXIT_OK
    out = capsys.readouterr().out
    assert "separated: 1" in out
    assert "sparsity: 1\n" in out


def test_cut_rejects_non_edges(tmp_path, c4_file):
    cut = _write(tmp_path, "bad.cut", "c 0 2 1/1\n")
    assert main.main(['cut', 'sparsity', '--graph', c4_file, '--cut', cut, '--h', '1', '--s', '1']) == main.EXIT_INPUT


def test_expdemand_command(tmp_path, c4_file, capsys):
    assert main.main(['cut', 'expdemand', '--graph', c4_file, '--h', '1', '--s', '2']) == main.EXIT_OK
    captured = capsys.readouterr()
    assert captured.out.startswith("d ")
    assert "scale" in captured.err
    out = str(tmp_path / "exp.txt")
    assert main.main(['cut', 'expdemand', '--graph', c4_file, '--h', '1', '--s', '2', '--out', out]) == main.EXIT_OK
    assert open(out).read() == captured.out


def test_shipped_data_files():
    data = Path(__file__).resolve().parent.parent / "data"
    c4 = read_graph(str(data / "c4.txt"))
    assert c4.edge_pairs() == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert read_graph(str(data / "k4.txt")).edge_count == 6
    assert read_graph(str(data / "weighted_triangle.txt")).length(1) == 4
    cut = parse_cut(read_text(str(data / "c4_cut.txt")), c4)
    demand = parse_demand(read_text(str(data / "c4_demand.txt")))
    assert cut.size == 1
    assert demand.size == 2
    plan = read_plan(str(data / "sample_plan.txt"))
    assert len(plan.instances()) == 3 * 2 * 2 * (1 + 2)
