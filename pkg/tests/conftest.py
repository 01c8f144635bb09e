import re

import pytest

from nodalgraph.gallery import TREE7_EDGES
from nodalgraph.graph_core import validate_graph


def path_graph(n, potential=None):
    return validate_graph(n, [(i, i + 1) for i in range(n - 1)], potential)


def star_graph(n):
    return validate_graph(n, [(0, i) for i in range(1, n)])


def cycle_graph(n):
    return validate_graph(n, [(i, (i + 1) % n) for i in range(n)])


def tree7_graph():
    return validate_graph(7, TREE7_EDGES)


@pytest.fixture
def tree7():
    return tree7_graph()


@pytest.fixture
def star5():
    return star_graph(5)


def pytest_terminal_summary(terminalreporter):
    verdicts: dict[int, list[tuple[str, bool]]] = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", getattr(rep, "nodeid", ""))
            if m and (rep.when == "call" or outcome == "error"):
                verdicts.setdefault(int(m.group(1)), []).append((m.group(2), outcome == "passed"))
    if verdicts:
        terminalreporter.section("acceptance criteria")
        for num in sorted(verdicts):
            parts = sorted(verdicts[num])
            ok = all(p for _, p in parts)
            names = ", ".join(n.replace("_", " ") for n, _ in parts)
            terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  ({names})")
