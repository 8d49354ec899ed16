import csv
from pathlib import Path

import pytest

from analysis.report import REPORT_FIELDS
from gen.families import GeneratorSpec
from gen.reports import ReportWriter, write_report_csv
from sweep.plan import Instance, SweepPlan, parse_plan, read_plan
from sweep.plot import plot_sizes
from sweep.runner import run_instance, run_sweep
from utils.errors import GraphFormatError, InputError

PLAN = """
# small sweep
families = cycle:6, hypercube:3
t = 3
algorithms = seq, par
strategies = greedy-maximal
seeds = 1, 2
girth = yes
threads = 2
"""


def _rows(path) -> list[dict]:
    with open(path, newline='') as f:
        return list(csv.DictReader(f))


def test_parse_plan_defaults():
    plan = parse_plan("families = er:32:0.2\nt = 3, 5\n")
    assert plan.families == ['er:32:0.2']
    assert plan.t_values == [3, 5]
    assert plan.strategies == ['greedy-maximal']
    assert plan.algorithms == ['par']
    assert plan.output == 'sweep.csv'
    assert plan.girth and not plan.routing_probes
    assert plan.svg is None


def test_parse_plan_reads_every_key():
    plan = parse_plan(PLAN + "output = out.csv\nrouting_probes = on\narboricity_budget = 9\nsvg = sizes.svg\n")
    assert plan.algorithms == ['seq', 'par']
    assert plan.seeds == [1, 2]
    assert plan.threads == 2
    assert plan.output == 'out.csv'
    assert plan.routing_probes
    assert plan.arboricity_budget == 9
    assert plan.svg == 'sizes.svg'


@pytest.mark.parametrize("text,line", [
    ("families = cycle:4\nt = 3\ncolour = red\n", 3),
    ("families = cycle:4\nt = 3\nt = 5\n", 3),
    ("families = cycle:4\n", 1),
    ("t = 3\n", 1),
    ("families = cycle:4\nt = three\n", 2),
    ("families = cycle:4\nt = 3\ngirth = maybe\n", 3),
    ("families cycle:4\n", 1),
])
def test_malformed_plans(text, line):
    with pytest.raises(GraphFormatError) as info:
        parse_plan(text)
    assert info.value.line == line


@pytest.mark.parametrize("text", [
    "families = cycle:4\nt = 1\n",
    "families = cycle:4\nt = 3\nalgorithms = fast\n",
    "families = cycle:4\nt = 3\nstrategies = random\n",
    "families = cycle:4\nt = 3\nthreads = 0\n",
    "families = moebius:4\nt = 3\n",
])
def test_invalid_plans(text):
    with pytest.raises(InputError):
        parse_plan(text)


def test_instances_in_plan_order():
    plan = SweepPlan(
        families=['cycle:4', 'cycle:6'], t_values=[3], algorithms=['seq', 'par'],
        strategies=['greedy-maximal', 'lexicographic'], seeds=[7],
    )
    assert plan.instances() == [
        Instance('cycle:4', 3, 'seq', 'sequential', 7),
        Instance('cycle:4', 3, 'par', 'greedy-maximal', 7),
        Instance('cycle:4', 3, 'par', 'lexicographic', 7),
        Instance('cycle:6', 3, 'seq', 'sequential', 7),
        Instance('cycle:6', 3, 'par', 'greedy-maximal', 7),
        Instance('cycle:6', 3, 'par', 'lexicographic', 7),
    ]


def test_run_instance_on_the_alternating_script():
    plan = SweepPlan(families=['cycle:4'], t_values=[3], routing_probes=True)
    result = run_instance(Instance('cycle:4', 3, 'par', 'alternating', 0), plan)
    assert result.report.m_spanner == 4
    assert result.report.girth == 4
    assert result.certificate_ok
    assert result.probe_witness is None


def test_run_sweep_writes_one_verified_row_per_instance(tmp_path):
    plan = parse_plan(PLAN)
    out = tmp_path / "sweep.csv"
    seen = []
    summary = run_sweep(plan, str(out), progress=lambda label, result: seen.append(label))
    assert summary.ok
    assert summary.rows == len(plan.instances()) == 8
    assert len(seen) == 8

    rows = _rows(out)
    assert list(rows[0]) == REPORT_FIELDS
    assert [r['algorithm'] for r in rows[:2]] == ['seq', 'par']
    assert [r['strategy'] for r in rows[:2]] == ['sequential', 'greedy-maximal']
    assert {r['n'] for r in rows} == {'6', '8'}
    assert all(r['max_stretch'] != '>3' for r in rows)


def test_sweep_output_is_reproducible_apart_from_timing(tmp_path):
    plan = parse_plan(PLAN)
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    run_sweep(plan, str(first))
    plan.threads = 1
    run_sweep(plan, str(second))

    def strip(rows):
        return [{k: v for k, v in r.items() if k != 'millis'} for r in rows]

    assert strip(_rows(first)) == strip(_rows(second))


def test_dimensions_strategy_needs_a_hypercube(tmp_path):
    plan = SweepPlan(families=['cycle:4'], t_values=[3], strategies=['dimensions'])
    with pytest.raises(InputError):
        run_sweep(plan, str(tmp_path / "x.csv"))


def test_plan_file_and_plot(tmp_path):
    plan_path = tmp_path / "plan.txt"
    plan_path.write_text(PLAN)
    plan = read_plan(str(plan_path))
    summary = run_sweep(plan, str(tmp_path / "sweep.csv"))
    svg = tmp_path / "sizes.svg"
    plot_sizes(summary.reports, str(svg))
    assert "<svg" in svg.read_text()


def test_report_writer_fills_missing_columns(tmp_path):
    path = tmp_path / "r.csv"
    write_report_csv([{'n': 4, 't': 3}], str(path))
    rows = _rows(path)
    assert rows[0]['n'] == '4'
    assert rows[0]['girth'] == ''
    with ReportWriter(str(path)) as writer:
        writer.write({'n': 1})
        writer.write({'n': 2})
    assert writer.rows_written == 2
    assert len(_rows(path)) == 2


@pytest.mark.slow
def test_er_scaling_plan_reports_finite_degeneracy_deterministically(tmp_path):
    data = Path(__file__).resolve().parent.parent / "data"
    plan = read_plan(str(data / "er_scaling_plan.txt"))
    assert [GeneratorSpec.parse(f).params[0] for f in plan.families] == [2 ** k for k in range(8, 13)]
    assert plan.t_values == [3, 5, 7, 9]
    assert plan.algorithms == ['par']

    plan.families = plan.families[:2]
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run_sweep(plan, str(first)).ok
    plan.threads = 1
    run_sweep(plan, str(second))

    rows = _rows(first)
    assert len(rows) == 2 * 4
    for row in rows:
        assert 0 < int(row['degeneracy']) < int(row['n'])
        assert row['max_stretch'] != f">{row['t']}"

    def strip(rows):
        return [{k: v for k, v in r.items() if k != 'millis'} for r in rows]

    assert strip(rows) == strip(_rows(second))
