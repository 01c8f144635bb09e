"""Weighted graphs with a vertex potential and their Schrödinger operator.

For a graph with symmetric positive edge weights ``b`` and potential ``v``
the operator acts as

    (H f)(x) = sum_{y ~ x} b(x, y) (f(x) - f(y)) + v(x) f(x)

Vertices are the integers ``0..n-1``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    Disconnected,
    DuplicateEdge,
    EmptyGraph,
    GraphError,
    NonPositiveWeight,
    SelfLoop,
    VertexOutOfRange,
)

Edge = tuple[int, int, float]


@dataclass(frozen=True)
class WeightedGraph:
    """A validated, connected, simple weighted graph.

    Build instances with :func:`validate_graph`; the constructor does not check
    anything. ``edges`` holds ``(u, v, w)`` with ``u < v``, sorted.
    """

    n: int
    edges: tuple[Edge, ...]
    potential: tuple[float, ...]

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def _arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        if not self.edges:
            empty = np.zeros(0, dtype=np.intp)
            return empty, empty, np.zeros(0)
        u, v, w = zip(*self.edges)
        return np.array(u, dtype=np.intp), np.array(v, dtype=np.intp), np.array(w, dtype=float)

    @property
    def tails(self) -> np.ndarray:
        return self._arrays[0]

    @property
    def heads(self) -> np.ndarray:
        return self._arrays[1]

    @property
    def weights(self) -> np.ndarray:
        return self._arrays[2]

    @cached_property
    def potential_array(self) -> np.ndarray:
        return np.array(self.potential, dtype=float)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def weight(self, x: int, y: int) -> float:
        """b(x, y); zero for non-adjacent pairs."""
        a, b = min(x, y), max(x, y)
        for u, v, w in self.edges:
            if u == a and v == b:
                return w
        return 0.0

    @property
    def has_zero_potential(self) -> bool:
        return not any(self.potential)


def validate_graph(
    n: int,
    edges: Iterable[Sequence],
    potential: Sequence[float] | None = None,
) -> WeightedGraph:
    """Check raw graph data and return a :class:`WeightedGraph`.

    Each edge is ``(u, v)`` (unit weight) or ``(u, v, w)``. Raises a subclass of
    :class:`~nodalgraph.errors.GraphError` on the first problem found.
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise GraphError(f"vertex count must be an integer, got {n!r}")
    n = int(n)
    if n < 1:
        raise EmptyGraph(f"graph must have at least one vertex, got n={n}")

    seen: dict[tuple[int, int], float] = {}
    for raw in edges:
        raw = tuple(raw)
        if len(raw) == 2:
            x, y, w = raw[0], raw[1], 1.0
        elif len(raw) == 3:
            x, y, w = raw
        else:
            raise GraphError(f"edge must be (u, v) or (u, v, w), got {raw!r}")
        for z in (x, y):
            if isinstance(z, bool) or not isinstance(z, (int, np.integer)):
                raise GraphError(f"vertex ids must be integers, got {z!r}")
            if not 0 <= z < n:
                raise VertexOutOfRange(f"vertex {z} outside 0..{n - 1}")
        x, y = int(x), int(y)
        if x == y:
            raise SelfLoop(f"self-loop at vertex {x}")
        w = float(w)
        if not (w > 0 and math.isfinite(w)):
            raise NonPositiveWeight(f"edge {{{x}, {y}}} has weight {w!r}; weights must be finite and > 0")
        key = (min(x, y), max(x, y))
        if key in seen:
            raise DuplicateEdge(f"edge {{{key[0]}, {key[1]}}} listed twice")
        seen[key] = w

    if potential is None:
        pot = (0.0,) * n
    else:
        pot = tuple(float(p) for p in potential)
        if len(pot) != n:
            raise DimensionMismatch(f"potential has length {len(pot)}, expected {n}")
        if not all(math.isfinite(p) for p in pot):
            raise GraphError("potential values must be finite")

    g = WeightedGraph(n=n, edges=tuple((u, v, w) for (u, v), w in sorted(seen.items())), potential=pot)
    _require_connected(g)
    return g


def _require_connected(g: WeightedGraph) -> None:
    reached = [False] * g.n
    reached[0] = True
    queue = deque([0])
    count = 1
    while queue:
        x = queue.popleft()
        for y in g.neighbors[x]:
            if not reached[y]:
                reached[y] = True
                count += 1
                queue.append(y)
    if count != g.n:
        missing = [x for x in range(g.n) if not reached[x]]
        raise Disconnected(f"graph is disconnected; vertices {missing} unreachable from 0")


def assemble_operator(g: WeightedGraph) -> np.ndarray:
    """Dense symmetric matrix of the operator."""
    H = np.zeros((g.n, g.n))
    for u, v, w in g.edges:
        H[u, v] = -w
        H[v, u] = -w
        H[u, u] += w
        H[v, v] += w
    H[np.diag_indices(g.n)] += g.potential_array
    return H


def _as_vector(g: WeightedGraph, f) -> np.ndarray:
    f = np.asarray(f, dtype=float)
    if f.shape != (g.n,):
        raise DimensionMismatch(f"vector has shape {f.shape}, expected ({g.n},)")
    return f


def apply_operator(g: WeightedGraph, f) -> np.ndarray:
    """H f evaluated edge by edge, without forming the matrix."""
    f = _as_vector(g, f)
    out = g.potential_array * f
    flow = g.weights * (f[g.tails] - f[g.heads])
    np.add.at(out, g.tails, flow)
    np.add.at(out, g.heads, -flow)
    return out


def quadratic_form(g: WeightedGraph, f) -> float:
    """<H f, f> in symmetrized form: sum over edges of b (f(x)-f(y))^2 plus sum v f^2."""
    f = _as_vector(g, f)
    diff = f[g.tails] - f[g.heads]
    return float(np.dot(g.weights, diff * diff) + np.dot(g.potential_array, f * f))
