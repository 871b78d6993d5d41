"""Seeded graph generators for the test corpora and the ``gen`` command."""

from __future__ import annotations

import math
import random

import numpy as np
from scipy.spatial import Delaunay

from .errors import GraphInputError
from .graph import Graph, circulant, from_edge_list
from .structure.cockade import CockadeNode, generate_cockade

__all__ = [
    "circulant",
    "cockade_suite",
    "random_cockade",
    "random_dense",
    "random_gnm",
    "random_gnp",
    "random_planar",
]


def random_planar(n: int, seed: int = 0, keep: float = 1.0) -> Graph:
    """Delaunay triangulation of ``n`` random points, each edge kept with probability ``keep``."""
    if n < 0:
        raise GraphInputError("n must be non-negative")
    if n <= 3:
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
        return from_edge_list(n, edges)
    rng = np.random.default_rng(seed)
    points = rng.random((n, 2))
    tri = Delaunay(points)
    edges = set()
    for simplex in tri.simplices:
        a, b, c = sorted(int(x) for x in simplex)
        edges.update([(a, b), (a, c), (b, c)])
    edges = sorted(edges)
    if keep < 1.0:
        mask = rng.random(len(edges)) < keep
        edges = [e for e, m in zip(edges, mask) if m]
    return from_edge_list(n, edges)


def random_gnp(n: int, p: float, seed: int = 0) -> Graph:
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return from_edge_list(n, edges)


def random_gnm(n: int, m: int, seed: int = 0) -> Graph:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if m > len(pairs):
        raise GraphInputError(f"{m} edges do not fit on {n} vertices")
    return from_edge_list(n, sorted(random.Random(seed).sample(pairs, m)))


def random_dense(n: int, seed: int = 0, extra: int = 0) -> Graph:
    """Random graph with exactly ``ceil(9n/2 - 12) + extra`` edges (capped at complete)."""
    m = min(math.ceil(9 * n / 2 - 12) + extra, n * (n - 1) // 2)
    return random_gnm(n, max(m, 0), seed)


def random_cockade(max_n: int, seed: int = 0) -> tuple[Graph, CockadeNode]:
    """Glue random pieces until the next one would pass ``max_n`` vertices."""
    if max_n < 6:
        raise GraphInputError("a cockade has at least 6 vertices")
    rng = random.Random(seed)
    first = "K6" if max_n < 8 else rng.choice(["K6", "K2222"])
    recipe = [first]
    n = 6 if first == "K6" else 8
    while True:
        tag = rng.choice(["K6", "K2222"])
        grow = 2 if tag == "K6" else 4
        if n + grow > max_n or (n > 6 and rng.random() < 0.08):
            if tag == "K2222" and n + 2 <= max_n and rng.random() < 0.5:
                tag, grow = "K6", 2
            else:
                break
        recipe.append(tag)
        n += grow
    return generate_cockade(recipe, rng_seed=rng.randrange(2**32))


def cockade_suite(count: int = 200, max_n: int = 40, seed: int = 0) -> list[tuple[Graph, CockadeNode]]:
    rng = random.Random(seed)
    return [random_cockade(rng.randint(6, max_n), seed=rng.randrange(2**32)) for _ in range(count)]
