"""Command-line front end.

Exit codes: 0 all checks pass, 1 a mathematical verification failed,
2 input or usage error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import __version__
from .courant import DEFAULT_SAMPLES, verify_graph
from .dot import to_dot
from .errors import DimensionMismatch, GraphError, GraphFileError, NodalError
from .fileio import read_graph
from .gallery import TREE7_LABELS, index_check, star_counterexample, tree7_counterexample
from .graph_core import assemble_operator
from .nodal import DEFAULT_TAU, classify_signs, strong_domains, weak_domains
from .report import SCHEMA_VERSION, dumps, verify_document
from .spectra import DEFAULT_TAU_GROUP, eigendecompose, group_eigenvalues
from .suite import run_suite, suite_document

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fmt(x: float, scale: float = 1.0) -> str:
    if abs(x) <= 1e-12 * scale:
        return "0"
    return "%.12g" % x


def _analyse(args):
    g = read_graph(args.file)
    s = eigendecompose(assemble_operator(g))
    groups = group_eigenvalues(s, args.tau_group)
    return g, s, groups


def _check_k(args, n: int) -> None:
    if not 1 <= args.k <= n:
        raise UsageError(f"--k must lie in 1..{n}, got {args.k}")


def cmd_spectrum(args, out) -> int:
    _, s, groups = _analyse(args)
    if args.json:
        out.write(
            dumps(
                {
                    "schema_version": SCHEMA_VERSION,
                    "command": "spectrum",
                    "eigenvalues": [float(x) for x in s.eigenvalues],
                    "groups": [{"lo": lo, "hi": hi} for lo, hi in groups.clusters],
                }
            )
        )
        return EXIT_OK
    scale = 1.0 + float(np.max(np.abs(s.eigenvalues)))
    parts = []
    for lo, hi in groups.clusters:
        vals = [_fmt(s.eigenvalue(i), scale) for i in range(lo, hi + 1)]
        parts.append(vals[0] if lo == hi else "[" + ", ".join(vals) + "]")
    out.write(", ".join(parts) + "\n")
    return EXIT_OK


def _domain_lines(partition) -> list[str]:
    lines = [f"{partition.kind} domains: {partition.count}"]
    for d in partition.domains:
        lines.append(f"  {'+' if d.sign > 0 else '-'} {d.sorted_vertices()}")
    return lines


def cmd_domains(args, out) -> int:
    g, s, groups = _analyse(args)
    _check_k(args, g.n)
    k = args.k
    f = s.eigenvector(k)
    signs = classify_signs(f, args.tau)
    parts = []
    if args.mode in ("weak", "both"):
        parts.append(weak_domains(g, signs))
    if args.mode in ("strong", "both"):
        parts.append(strong_domains(g, signs))
    lo, hi = groups.cluster_of(k)
    if args.json:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": "domains",
            "k": k,
            "eigenvalue": s.eigenvalue(k),
            "lo": lo,
            "hi": hi,
            "tau": args.tau,
            "signs": list(signs.signs),
        }
        for p in parts:
            doc[p.kind] = {
                "count": p.count,
                "domains": [{"sign": d.sign, "vertices": d.sorted_vertices()} for d in p.domains],
            }
        out.write(dumps(doc))
        return EXIT_OK
    lines = [f"k={k} lambda={_fmt(s.eigenvalue(k), s.scale)} lo={lo} hi={hi} tau={args.tau:g}"]
    for p in parts:
        lines += _domain_lines(p)
    counts = " ".join(f"{p.kind}={p.count}" for p in parts)
    lines.append(f"counts: {counts} (bounds: weak <= {lo}, strong <= {hi})")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    g = read_graph(args.file)
    rep = verify_graph(g, args.samples, args.seed, args.tau, args.tau_group)
    if args.json:
        out.write(dumps(verify_document(rep)))
        return EXIT_OK if rep.passed else EXIT_FAIL
    lines = [
        f"graph: n={g.n} edges={g.num_edges}  samples={args.samples} seed={args.seed} "
        f"tau={args.tau:g} tau_group={args.tau_group:g}",
        f"{'k':>3} {'sample':>6} {'lambda':>16} {'lo':>3} {'hi':>3} {'weak':>5} {'strong':>6}  result",
    ]
    scale = rep.spectrum.scale
    for r in rep.records:
        lines.append(
            f"{r.k:>3} {r.sample:>6} {_fmt(r.eigenvalue, scale):>16} {r.lo:>3} {r.hi:>3} "
            f"{r.weak_count:>5} {r.strong_count:>6}  {'ok' if r.passed else 'FAIL'}"
        )
    lines.append(f"perron: {'ok' if rep.perron.passed else 'FAIL'}")
    lines.append(f"eigensolver contract: {'ok' if rep.checks.passed else 'FAIL'}")
    bad = [r for r in rep.records if not r.passed]
    for r in bad:
        lines.append(f"failing record k={r.k} sample={r.sample}")
    lines.append(f"result: {'PASS' if rep.passed else 'FAIL'}")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_gallery(args, out) -> int:
    if args.which == "star":
        if args.n < 3:
            raise UsageError(f"star needs --n >= 3, got {args.n}")
        res = star_counterexample(args.n)
    else:
        res = tree7_counterexample()
    pair = res.pair
    verdict = index_check(pair)
    lo, hi = verdict.lo, verdict.hi
    bounds_ok = res.weak_count <= lo and res.strong_count <= hi
    name = f"star S_{args.n}" if args.which == "star" else "7-vertex tree"
    lines = [f"gallery: {name}"]
    if args.which == "tree7":
        lines.append("vertex order: " + " ".join(f"{i}={lab}" for i, lab in enumerate(TREE7_LABELS)))
    lines.append(f"lambda = {pair.lam} ~ {float(pair.lam):.16g}")
    lines.append("f = (" + ", ".join(str(x) for x in pair.f) + ")")
    edges = [list(e) for e in res.pos_neg_edges]
    if res.certificate.passed:
        lines.append(f"exact eigenpair certified; weak={res.weak_count} strong={res.strong_count}; pos-neg edges: {edges}")
    else:
        lines.append(f"exact eigenpair FAILED at vertices {list(res.certificate.failing_vertices)}")
    errs = ", ".join(f"{e:.3g}" for e in verdict.errors)
    lines.append(
        f"numeric indices {verdict.expected[0]}..{verdict.expected[1]}: |lambda_i - lambda| = {errs}; "
        f"cluster lo={lo} hi={hi} ({'ok' if verdict.passed else 'FAIL'})"
    )
    lines.append(
        f"weak={res.weak_count} with k̲={lo}, strong={res.strong_count} with k̄={hi}: "
        f"theorem bounds {'ok' if bounds_ok else 'FAIL'}"
    )
    passed = res.certificate.passed and verdict.passed and bounds_ok
    lines.append(f"result: {'PASS' if passed else 'FAIL'}")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK if passed else EXIT_FAIL


def cmd_suite(args, out) -> int:
    if args.cases < 1:
        raise UsageError("--cases must be at least 1")
    if args.max_n < 2:
        raise UsageError("--max-n must be at least 2")
    results = run_suite(args.cases, args.max_n, args.seed, args.samples, args.tau, args.tau_group)
    doc = suite_document(results, args.cases, args.max_n, args.seed, args.samples, args.tau, args.tau_group)
    if args.json:
        out.write(dumps(doc))
    else:
        t = doc["totals"]
        violations = t["weak_violations"] + t["strong_violations"] + t["powers_violations"] + t["fiedler_violations"]
        lines = [
            f"suite: cases={args.cases} max_n={args.max_n} seed={args.seed} samples={args.samples} tau={args.tau:g}",
            f"graphs={t['graphs']} records={t['records']} degenerate_clusters={t['degenerate_clusters']}",
            f"bound violations={violations} (weak={t['weak_violations']} strong={t['strong_violations']} "
            f"powers={t['powers_violations']} fiedler={t['fiedler_violations']}/{t['fiedler_checks']})",
            f"proof diagnostics: {t['diagnostics_checked']} checked, {t['diagnostics_failed']} failed",
            f"perron failures={t['perron_failures']} eigensolver failures={t['spectrum_failures']}",
            f"oracle: {t['oracle_graphs']} graphs, {t['oracle_comparisons']} comparisons, "
            f"{t['oracle_mismatches']} mismatches",
            f"result: {'PASS' if doc['passed'] else 'FAIL'}",
        ]
        out.write("\n".join(lines) + "\n")
    return EXIT_OK if doc["passed"] else EXIT_FAIL


def cmd_export_dot(args, out) -> int:
    g, s, _ = _analyse(args)
    _check_k(args, g.n)
    f = s.eigenvector(args.k)
    text = to_dot(g, f, classify_signs(f, args.tau))
    if args.output in (None, "-"):
        out.write(text)
        return EXIT_OK
    try:
        with open(args.output, "w", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {args.output}: {exc.strerror}") from None
    return EXIT_OK


def _nonneg_int(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def _tau(text: str) -> float:
    v = float(text)
    if not 0 <= v < 1:
        raise argparse.ArgumentTypeError("must lie in [0, 1)")
    return v


def _positive(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nodalgraph", description="Nodal domains of Schrödinger operators on graphs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, tau=True):
        sp.add_argument("--tau-group", type=_positive, default=DEFAULT_TAU_GROUP, help="eigenvalue grouping tolerance")
        if tau:
            sp.add_argument("--tau", type=_tau, default=DEFAULT_TAU, help="relative zero tolerance for signs")

    sp = sub.add_parser("spectrum", help="print eigenvalues with multiplicity groups")
    sp.add_argument("file", help="graph file, or builtin:<name>")
    sp.add_argument("--json", action="store_true", help="emit a JSON report")
    common(sp, tau=False)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("domains", help="list the nodal domains of f_K")
    sp.add_argument("file", help="graph file, or builtin:<name>")
    sp.add_argument("--k", type=int, required=True, help="1-based eigenvalue index")
    sp.add_argument("--mode", choices=("weak", "strong", "both"), default="both", help="which partition to list")
    sp.add_argument("--json", action="store_true", help="emit a JSON report")
    common(sp)
    sp.set_defaults(func=cmd_domains)

    sp = sub.add_parser("verify", help="check the nodal domain bounds for every eigenfunction")
    sp.add_argument("file", help="graph file, or builtin:<name>")
    sp.add_argument("--samples", type=_nonneg_int, default=DEFAULT_SAMPLES, help="random samples per repeated eigenvalue")
    sp.add_argument("--seed", type=_nonneg_int, default=0, help="RNG seed")
    sp.add_argument("--json", action="store_true", help="emit a JSON report")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("gallery", help="exact certification of the star and tree counterexamples")
    sp.add_argument("which", choices=("star", "tree7"))
    sp.add_argument("--n", type=int, default=5, help="number of star vertices")
    sp.set_defaults(func=cmd_gallery)

    sp = sub.add_parser("suite", help="randomized property campaign")
    sp.add_argument("--cases", type=int, default=200, help="number of random graphs")
    sp.add_argument("--max-n", type=int, default=12, help="largest vertex count")
    sp.add_argument("--seed", type=_nonneg_int, default=0, help="RNG seed")
    sp.add_argument("--samples", type=_nonneg_int, default=DEFAULT_SAMPLES, help="random samples per repeated eigenvalue")
    sp.add_argument("--json", action="store_true", help="emit a JSON report")
    common(sp)
    sp.set_defaults(func=cmd_suite)

    sp = sub.add_parser("export-dot", help="write a sign-coloured DOT rendering of f_K")
    sp.add_argument("file", help="graph file, or builtin:<name>")
    sp.add_argument("--k", type=int, required=True, help="1-based eigenvalue index")
    sp.add_argument("-o", "--output", default=None, help="output path (default: stdout)")
    common(sp)
    sp.set_defaults(func=cmd_export_dot)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out)
    except (UsageError, GraphError, GraphFileError, DimensionMismatch) as exc:
        print(f"nodalgraph {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NodalError as exc:
        print(f"nodalgraph {args.command}: verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
