"""Seeded generators for the test corpus.

Randomness comes from numpy's PCG64 bit generator seeded with the given
64-bit integer, so a ``(kind, n, modes, seed)`` tuple always produces the same
graph with a given numpy release.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import Disconnected, GenerationFailure
from .graph_core import WeightedGraph, validate_graph

KINDS = ("path", "cycle", "star", "random_tree", "erdos_renyi")
WEIGHT_MODES = ("unit", "random")
POTENTIAL_MODES = ("zero", "random")
MAX_ATTEMPTS = 1000


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def er_edge_probability(n: int) -> float:
    if n <= 2:
        return 1.0
    return min(1.0, 2.0 * math.log(n) / n)


def _structure(kind: str, n: int, rng: np.random.Generator) -> list[tuple[int, int]]:
    if kind == "path":
        return [(i, i + 1) for i in range(n - 1)]
    if kind == "cycle":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    if kind == "star":
        return [(0, i) for i in range(1, n)]
    if kind == "random_tree":
        perm = rng.permutation(n)
        return [(int(perm[int(rng.integers(0, i))]), int(perm[i])) for i in range(1, n)]
    raise ValueError(f"unknown graph kind {kind!r}")


def _decorate(n, pairs, weight_mode, potential_mode, rng) -> WeightedGraph:
    pairs = sorted((min(u, v), max(u, v)) for u, v in pairs)
    if weight_mode == "unit":
        weights = [1.0] * len(pairs)
    else:
        # 2 * (1 - U) with U in [0, 1) lands in (0, 2]
        weights = list(2.0 * (1.0 - rng.random(len(pairs))))
    if potential_mode == "zero":
        potential = None
    else:
        potential = list(rng.uniform(-1.0, 1.0, n))
    return validate_graph(n, [(u, v, w) for (u, v), w in zip(pairs, weights)], potential)


def generate_graph(
    kind: str,
    n: int,
    weight_mode: str = "unit",
    potential_mode: str = "zero",
    seed: int = 0,
) -> WeightedGraph:
    """Connected test graph of the requested family.

    ``weight_mode`` is ``"unit"`` or ``"random"`` (uniform on (0, 2]);
    ``potential_mode`` is ``"zero"`` or ``"random"`` (uniform on [-1, 1]).
    Erdős–Rényi graphs are drawn with edge probability ``min(1, 2 ln n / n)``
    and rejected until connected.
    """
    if n < 2:
        raise ValueError("generated graphs need n >= 2")
    if kind not in KINDS:
        raise ValueError(f"unknown graph kind {kind!r}")
    if weight_mode not in WEIGHT_MODES:
        raise ValueError(f"unknown weight mode {weight_mode!r}")
    if potential_mode not in POTENTIAL_MODES:
        raise ValueError(f"unknown potential mode {potential_mode!r}")
    rng = make_rng(seed)
    if kind != "erdos_renyi":
        return _decorate(n, _structure(kind, n, rng), weight_mode, potential_mode, rng)

    p = er_edge_probability(n)
    iu, ju = np.triu_indices(n, k=1)
    for _ in range(MAX_ATTEMPTS):
        keep = rng.random(len(iu)) < p
        pairs = [(int(a), int(b)) for a, b in zip(iu[keep], ju[keep])]
        try:
            return _decorate(n, pairs, weight_mode, potential_mode, rng)
        except Disconnected:
            continue
    raise GenerationFailure(f"no connected G({n}, {p:.3f}) found in {MAX_ATTEMPTS} attempts")
