"""Reading and writing graph files.

Two formats are supported, both 0-indexed.

JSON::

    {"n": 3, "edges": [[0, 1, 1.0], [1, 2, 0.5]], "potential": [0.0, 0.0, 0.1]}

``potential`` is optional; no other keys are allowed.

Text, one directive per line::

    # comment
    n 3
    e 0 1 1.0
    e 1 2 0.5
    v 2 0.1

``n`` must appear exactly once. Vertices without a ``v`` line get potential 0.
Blank lines are ignored.
"""

from __future__ import annotations

import json
import math
from importlib import resources
from pathlib import Path

from .errors import GraphFileError
from .graph_core import WeightedGraph, validate_graph

BUILTIN_PREFIX = "builtin:"


def builtin_names() -> list[str]:
    root = resources.files("nodalgraph") / "data"
    return sorted(p.name.rsplit(".", 1)[0] for p in root.iterdir() if p.name.endswith((".json", ".txt")))


def _parse_int(tok: str, where: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFileError(f"{where}: expected an integer, got {tok!r}") from None


def _parse_real(tok: str, where: str) -> float:
    try:
        x = float(tok)
    except ValueError:
        raise GraphFileError(f"{where}: expected a decimal number, got {tok!r}") from None
    if not math.isfinite(x):
        raise GraphFileError(f"{where}: non-finite value {tok!r}")
    return x


def parse_text(text: str) -> WeightedGraph:
    n = None
    edges = []
    pot: dict[int, float] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        where = f"line {lineno}"
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tag, *args = stripped.split()
        if tag == "n":
            if len(args) != 1:
                raise GraphFileError(f"{where}: 'n' takes one argument")
            if n is not None:
                raise GraphFileError(f"{where}: vertex count given twice")
            n = _parse_int(args[0], where)
        elif tag == "e":
            if len(args) != 3:
                raise GraphFileError(f"{where}: 'e' takes <u> <v> <w>")
            edges.append((_parse_int(args[0], where), _parse_int(args[1], where), _parse_real(args[2], where)))
        elif tag == "v":
            if len(args) != 2:
                raise GraphFileError(f"{where}: 'v' takes <vertex> <value>")
            x = _parse_int(args[0], where)
            if x in pot:
                raise GraphFileError(f"{where}: potential of vertex {x} given twice")
            pot[x] = _parse_real(args[1], where)
        else:
            raise GraphFileError(f"{where}: unknown line tag {tag!r}")
    if n is None:
        raise GraphFileError("missing 'n <count>' line")
    bad = [x for x in pot if not 0 <= x < n]
    if bad:
        raise GraphFileError(f"potential given for out-of-range vertex {bad[0]}")
    potential = [pot.get(x, 0.0) for x in range(n)] if pot else None
    return validate_graph(n, edges, potential)


def parse_json(text: str) -> WeightedGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFileError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise GraphFileError("JSON graph must be an object")
    unknown = set(doc) - {"n", "edges", "potential"}
    if unknown:
        raise GraphFileError(f"unknown keys {sorted(unknown)}")
    if "n" not in doc or "edges" not in doc:
        raise GraphFileError("JSON graph needs 'n' and 'edges'")
    n = doc["n"]
    if isinstance(n, bool) or not isinstance(n, int):
        raise GraphFileError(f"'n' must be an integer, got {n!r}")
    if not isinstance(doc["edges"], list):
        raise GraphFileError("'edges' must be a list")
    edges = []
    for i, e in enumerate(doc["edges"]):
        if not (isinstance(e, list) and len(e) == 3):
            raise GraphFileError(f"edge {i} must be [u, v, w]")
        u, v, w = e
        if any(isinstance(z, bool) or not isinstance(z, int) for z in (u, v)):
            raise GraphFileError(f"edge {i}: vertex ids must be integers")
        if isinstance(w, bool) or not isinstance(w, (int, float)):
            raise GraphFileError(f"edge {i}: weight must be a number")
        edges.append((u, v, float(w)))
    potential = doc.get("potential")
    if potential is not None:
        if not isinstance(potential, list) or any(
            isinstance(p, bool) or not isinstance(p, (int, float)) for p in potential
        ):
            raise GraphFileError("'potential' must be a list of numbers")
    return validate_graph(n, edges, potential)


def parse_graph(text: str, fmt: str | None = None) -> WeightedGraph:
    """Parse ``text``; ``fmt`` is ``"json"``, ``"text"`` or ``None`` to sniff."""
    if fmt is None:
        fmt = "json" if text.lstrip().startswith("{") else "text"
    if fmt == "json":
        return parse_json(text)
    if fmt == "text":
        return parse_text(text)
    raise ValueError(f"unknown format {fmt!r}")


def read_graph(path: str | Path) -> WeightedGraph:
    """Load a graph from disk, or a bundled example named ``builtin:<name>``."""
    spec = str(path)
    if spec.startswith(BUILTIN_PREFIX):
        name = spec[len(BUILTIN_PREFIX) :]
        root = resources.files("nodalgraph") / "data"
        for suffix in (".json", ".txt"):
            res = root / (name + suffix)
            if res.is_file():
                return parse_graph(res.read_text(), "json" if suffix == ".json" else "text")
        raise GraphFileError(f"no bundled graph {name!r}; available: {', '.join(builtin_names())}")
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise GraphFileError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph(text, "json" if path.suffix.lower() == ".json" else None)


def to_json_text(g: WeightedGraph) -> str:
    doc = {"n": g.n, "edges": [[u, v, w] for u, v, w in g.edges]}
    if not g.has_zero_potential:
        doc["potential"] = list(g.potential)
    return json.dumps(doc) + "\n"


def to_text(g: WeightedGraph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"e {u} {v} {w!r}" for u, v, w in g.edges]
    lines += [f"v {x} {p!r}" for x, p in enumerate(g.potential) if p != 0.0]
    return "\n".join(lines) + "\n"


def write_graph(g: WeightedGraph, path: str | Path) -> None:
    path = Path(path)
    text = to_json_text(g) if path.suffix.lower() == ".json" else to_text(g)
    path.write_text(text)
