"""
Sweep runner: every instance of a plan is built, verified and reported.

Instances run on a thread pool; results are consumed in plan order so the
CSV is identical across runs apart from the millis column.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from analysis.pg import verify_pg_sequence
from analysis.report import SpannerReport, build_report
from cuts.probe import pg_contradiction_probe
from gen.families import named_matchings
from gen.reports import ReportWriter
from spanner.greedy import build_spanner
from sweep.plan import Instance, SweepPlan
from utils.cache import graph_cache
from utils.errors import ContractViolation

log = logging.getLogger(__name__)

PROBE_MAX_EDGES = 64


@dataclass
class InstanceResult:
    instance: Instance
    report: SpannerReport
    certificate_ok: bool
    probe_witness: tuple[int, ...] | None = None


def run_instance(instance: Instance, plan: SweepPlan) -> InstanceResult:
    spec = instance.spec
    g = graph_cache.get_or_generate(spec)
    started = time.perf_counter()
    result = build_spanner(
        g, instance.t, instance.algorithm, instance.strategy, instance.seed,
        threads=1, named_rounds=named_matchings(spec),
    )
    millis = (time.perf_counter() - started) * 1000.0
    report = build_report(
        g, result.spanner, instance.t, result.rounds,
        algorithm=instance.algorithm,
        strategy=instance.strategy,
        seed=instance.seed,
        millis=millis,
        with_girth=plan.girth,
        arboricity_budget=plan.arboricity_budget,
    )
    certificate_ok = verify_pg_sequence(g.vertex_count, result.certificate, instance.t) is None
    witness = None
    if plan.routing_probes and result.spanner.edge_count <= PROBE_MAX_EDGES:
        witness = pg_contradiction_probe(result.spanner, result.certificate, instance.t, Fraction(1))
        if witness is not None and certificate_ok:
            raise ContractViolation(f"{spec.label}: probe found path {witness} against a valid certificate")
    return InstanceResult(instance, report, certificate_ok, witness)


@dataclass
class SweepSummary:
    rows: int
    failures: list[str]
    reports: list[SpannerReport]

    @property
    def ok(self) -> bool:
        return not self.failures


def run_sweep(plan: SweepPlan, output: str | None = None, progress=None) -> SweepSummary:
    """Write one CSV row per instance, flushed as soon as the instance finishes."""
    instances = plan.instances()
    path = output or plan.output
    log.info("sweep: %d instances on %d threads -> %s", len(instances), plan.threads, path)
    failures, reports = [], []
    with ReportWriter(path) as writer, ThreadPoolExecutor(max_workers=plan.threads) as pool:
        for result in pool.map(lambda inst: run_instance(inst, plan), instances):
            writer.write(result.report.as_row())
            reports.append(result.report)
            inst = result.instance
            label = f"{inst.family} t={inst.t} {inst.algorithm}/{inst.strategy} seed={inst.seed}"
            if not result.report.valid:
                failures.append(f"{label}: stretch {result.report.stretch_text()}")
            elif not result.certificate_ok:
                failures.append(f"{label}: certificate rejected")
            if progress is not None:
                progress(label, result)
    return SweepSummary(rows=len(reports), failures=failures, reports=reports)
