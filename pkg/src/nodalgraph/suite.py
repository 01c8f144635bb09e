"""Randomized property campaign over seeded graphs."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .courant import DEFAULT_SAMPLES, VerificationReport, verify_graph
from .generators import KINDS, generate_graph
from .graph_core import WeightedGraph
from .nodal import DEFAULT_TAU, brute_force_domains
from .report import SCHEMA_VERSION
from .spectra import DEFAULT_TAU_GROUP

ORACLE_MAX_N = 8


@dataclass(frozen=True, eq=False)
class SuiteCase:
    index: int
    kind: str
    graph_seed: int
    graph: WeightedGraph
    report: VerificationReport
    oracle_comparisons: int
    oracle_mismatches: int

    @property
    def oracle_checked(self) -> bool:
        return self.oracle_comparisons > 0

    @property
    def passed(self) -> bool:
        return self.report.passed and self.oracle_mismatches == 0


def case_parameters(seed: int, index: int, max_n: int) -> tuple[str, int, int]:
    """(kind, n, graph seed) for case ``index``, drawn from PCG64 seeded by ``[seed, index]``."""
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, index])))
    n = int(rng.integers(2, max_n + 1))
    kinds = [k for k in KINDS if not (k == "cycle" and n < 3)]
    kind = kinds[int(rng.integers(0, len(kinds)))]
    graph_seed = int(rng.integers(0, 2**63))
    return kind, n, graph_seed


def oracle_compare(rep: VerificationReport) -> tuple[int, int]:
    comparisons = mismatches = 0
    for rec in rep.records:
        for part in (rec.weak, rec.strong):
            oracle = brute_force_domains(rep.graph, part.signs, part.kind)
            comparisons += 1
            if oracle.vertex_sets() != part.vertex_sets() or oracle.count != part.count:
                mismatches += 1
    return comparisons, mismatches


def run_case(
    index: int,
    seed: int,
    max_n: int,
    samples: int = DEFAULT_SAMPLES,
    tau: float = DEFAULT_TAU,
    tau_group: float = DEFAULT_TAU_GROUP,
) -> SuiteCase:
    kind, n, graph_seed = case_parameters(seed, index, max_n)
    g = generate_graph(kind, n, "random", "random", graph_seed)
    rep = verify_graph(g, samples, graph_seed, tau, tau_group)
    comparisons, mismatches = oracle_compare(rep) if n <= ORACLE_MAX_N else (0, 0)
    return SuiteCase(index, kind, graph_seed, g, rep, comparisons, mismatches)


def run_suite(
    cases: int,
    max_n: int,
    seed: int = 0,
    samples: int = DEFAULT_SAMPLES,
    tau: float = DEFAULT_TAU,
    tau_group: float = DEFAULT_TAU_GROUP,
) -> list[SuiteCase]:
    if cases < 1:
        raise ValueError("need at least one case")
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    return [run_case(i, seed, max_n, samples, tau, tau_group) for i in range(cases)]


def totals(results: list[SuiteCase]) -> dict:
    records = [r for c in results for r in c.report.records]
    diags = [d for r in records for d in r.diagnostics.values() if d is not None]
    return {
        "graphs": len(results),
        "records": len(records),
        "degenerate_clusters": sum(
            1 for c in results for lo, hi in c.report.groups.clusters if hi > lo
        ),
        "weak_violations": sum(not r.weak_ok for r in records),
        "strong_violations": sum(not r.strong_ok for r in records),
        "powers_violations": sum(r.powers_ok is False for r in records),
        "fiedler_checks": sum(r.fiedler_ok is not None for r in records),
        "fiedler_violations": sum(r.fiedler_ok is False for r in records),
        "diagnostics_checked": len(diags),
        "diagnostics_failed": sum(not d.passed for d in diags),
        "perron_failures": sum(not c.report.perron.passed for c in results),
        "spectrum_failures": sum(not c.report.checks.passed for c in results),
        "oracle_graphs": sum(c.oracle_checked for c in results),
        "oracle_comparisons": sum(c.oracle_comparisons for c in results),
        "oracle_mismatches": sum(c.oracle_mismatches for c in results),
        "max_residual_ratio": max(c.report.checks.residual_bound / c.report.checks.scale for c in results),
        "max_orthonormality_error": max(c.report.checks.orthonormality_error for c in results),
        "max_remainder": max((d.remainder for d in diags), default=None),
    }


def suite_document(
    results: list[SuiteCase], cases: int, max_n: int, seed: int, samples: int, tau: float, tau_group: float
) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "suite",
        "parameters": {
            "cases": cases,
            "max_n": max_n,
            "seed": seed,
            "samples": samples,
            "tau": tau,
            "tau_group": tau_group,
        },
        "cases": [
            {
                "index": c.index,
                "kind": c.kind,
                "n": c.graph.n,
                "edges": c.graph.num_edges,
                "graph_seed": c.graph_seed,
                "records": len(c.report.records),
                "violations": len(c.report.violations),
                "oracle_checked": c.oracle_checked,
                "passed": c.passed,
            }
            for c in results
        ],
        "totals": totals(results),
        "passed": all(c.passed for c in results),
    }
