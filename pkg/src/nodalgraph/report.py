"""Machine-readable reports.

Documents are plain dicts whose key order is the emission order. Floats are
written with 17 significant digits (``%.17g``) so values round-trip exactly
and identical inputs give byte-identical text.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .courant import CaseRecord, SandwichDiagnostics, VerificationReport

SCHEMA_VERSION = "1.0"


def _scalar(x) -> str:
    if x is None:
        return "null"
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        x = float(x)
        if not math.isfinite(x):
            raise ValueError(f"cannot serialize non-finite number {x!r}")
        return "%.17g" % x
    if isinstance(x, str):
        return json.dumps(x)
    raise TypeError(f"cannot serialize {type(x).__name__}")


def dumps(obj, indent: int = 2) -> str:
    """Serialize a report document; dict order is preserved."""
    out: list[str] = []

    def emit(o, depth: int) -> None:
        pad = " " * (indent * (depth + 1))
        end = " " * (indent * depth)
        if isinstance(o, dict):
            if not o:
                out.append("{}")
                return
            out.append("{\n")
            for i, (key, val) in enumerate(o.items()):
                out.append(f"{pad}{json.dumps(str(key))}: ")
                emit(val, depth + 1)
                out.append(",\n" if i < len(o) - 1 else "\n")
            out.append(end + "}")
        elif isinstance(o, (list, tuple)):
            if not o:
                out.append("[]")
                return
            if all(not isinstance(v, (dict, list, tuple)) for v in o):
                out.append("[" + ", ".join(_scalar(v) for v in o) + "]")
                return
            out.append("[\n")
            for i, val in enumerate(o):
                out.append(pad)
                emit(val, depth + 1)
                out.append(",\n" if i < len(o) - 1 else "\n")
            out.append(end + "]")
        else:
            out.append(_scalar(o))

    emit(obj, 0)
    return "".join(out) + "\n"


def diagnostics_doc(d: SandwichDiagnostics | None):
    if d is None:
        return None
    return {
        "m": d.m,
        "lambda_m": d.lambda_m,
        "rayleigh": d.rayleigh,
        "remainder": d.remainder,
        "identity_error": d.identity_error,
        "variational_slack": d.variational_slack,
        "orthogonality": d.orthogonality,
        "passed": d.passed,
    }


def record_doc(r: CaseRecord) -> dict:
    return {
        "k": r.k,
        "sample": r.sample,
        "eigenvalue": r.eigenvalue,
        "lo": r.lo,
        "hi": r.hi,
        "weak_count": r.weak_count,
        "strong_count": r.strong_count,
        "residual": r.residual,
        "verdicts": {
            "weak_bound": r.weak_ok,
            "strong_bound": r.strong_ok,
            "powers": r.powers_ok,
            "fiedler": r.fiedler_ok,
        },
        "diagnostics": {
            "weak": diagnostics_doc(r.diagnostics.get("weak")),
            "strong": diagnostics_doc(r.diagnostics.get("strong")),
        },
        "passed": r.passed,
    }


def verify_document(rep: VerificationReport) -> dict:
    """Report document for ``verify``; the layout is fixed by ``VERIFY_SCHEMA``."""
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
        "graph": {"n": rep.graph.n, "edges": rep.graph.num_edges},
        "parameters": {
            "samples": rep.samples,
            "seed": rep.seed,
            "tau": rep.tau,
            "tau_group": rep.tau_group,
        },
        "eigenvalues": [float(x) for x in rep.spectrum.eigenvalues],
        "groups": [{"lo": lo, "hi": hi} for lo, hi in rep.groups.clusters],
        "spectrum_checks": {
            "residual_bound": rep.checks.residual_bound,
            "orthonormality_error": rep.checks.orthonormality_error,
            "trace_error": rep.checks.trace_error,
            "reconstruction_error": rep.checks.reconstruction_error,
            "passed": rep.checks.passed,
        },
        "perron": {
            "simple": rep.perron.simple,
            "min_entry": rep.perron.min_entry,
            "passed": rep.perron.passed,
        },
        "records": [record_doc(r) for r in rep.records],
        "passed": rep.passed,
    }


_NUM = {"type": "number"}
_INT = {"type": "integer"}
_BOOL = {"type": "boolean"}
_OPT_BOOL = {"type": ["boolean", "null"]}


def _obj(props: dict) -> dict:
    return {"type": "object", "properties": props, "required": list(props), "additionalProperties": False}


_DIAG = {
    "oneOf": [
        {"type": "null"},
        _obj(
            {
                "m": _INT,
                "lambda_m": _NUM,
                "rayleigh": _NUM,
                "remainder": _NUM,
                "identity_error": _NUM,
                "variational_slack": _NUM,
                "orthogonality": _NUM,
                "passed": _BOOL,
            }
        ),
    ]
}

VERIFY_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    **_obj(
        {
            "schema_version": {"const": SCHEMA_VERSION},
            "command": {"const": "verify"},
            "graph": _obj({"n": _INT, "edges": _INT}),
            "parameters": _obj({"samples": _INT, "seed": _INT, "tau": _NUM, "tau_group": _NUM}),
            "eigenvalues": {"type": "array", "items": _NUM},
            "groups": {"type": "array", "items": _obj({"lo": _INT, "hi": _INT})},
            "spectrum_checks": _obj(
                {
                    "residual_bound": _NUM,
                    "orthonormality_error": _NUM,
                    "trace_error": _NUM,
                    "reconstruction_error": _NUM,
                    "passed": _BOOL,
                }
            ),
            "perron": _obj({"simple": _BOOL, "min_entry": _NUM, "passed": _BOOL}),
            "records": {
                "type": "array",
                "items": _obj(
                    {
                        "k": _INT,
                        "sample": _INT,
                        "eigenvalue": _NUM,
                        "lo": _INT,
                        "hi": _INT,
                        "weak_count": _INT,
                        "strong_count": _INT,
                        "residual": _NUM,
                        "verdicts": _obj(
                            {"weak_bound": _BOOL, "strong_bound": _BOOL, "powers": _OPT_BOOL, "fiedler": _OPT_BOOL}
                        ),
                        "diagnostics": _obj({"weak": _DIAG, "strong": _DIAG}),
                        "passed": _BOOL,
                    }
                ),
            },
            "passed": _BOOL,
        }
    ),
}

_TOTALS = {
    "graphs": _INT,
    "records": _INT,
    "degenerate_clusters": _INT,
    "weak_violations": _INT,
    "strong_violations": _INT,
    "powers_violations": _INT,
    "fiedler_checks": _INT,
    "fiedler_violations": _INT,
    "diagnostics_checked": _INT,
    "diagnostics_failed": _INT,
    "perron_failures": _INT,
    "spectrum_failures": _INT,
    "oracle_graphs": _INT,
    "oracle_comparisons": _INT,
    "oracle_mismatches": _INT,
    "max_residual_ratio": _NUM,
    "max_orthonormality_error": _NUM,
    "max_remainder": {"type": ["number", "null"]},
}

SUITE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    **_obj(
        {
            "schema_version": {"const": SCHEMA_VERSION},
            "command": {"const": "suite"},
            "parameters": _obj(
                {"cases": _INT, "max_n": _INT, "seed": _INT, "samples": _INT, "tau": _NUM, "tau_group": _NUM}
            ),
            "cases": {
                "type": "array",
                "items": _obj(
                    {
                        "index": _INT,
                        "kind": {"type": "string"},
                        "n": _INT,
                        "edges": _INT,
                        "graph_seed": _INT,
                        "records": _INT,
                        "violations": _INT,
                        "oracle_checked": _BOOL,
                        "passed": _BOOL,
                    }
                ),
            },
            "totals": _obj(_TOTALS),
            "passed": _BOOL,
        }
    ),
}
