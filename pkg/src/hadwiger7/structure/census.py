"""Counting reports: degree-8 census and K5 intersection patterns."""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction

from ..graph import Graph
from .stable import enumerate_k5


def edge_budget(n: int) -> Fraction:
    """The density threshold ``9n/2 - 12``."""
    return Fraction(9 * n, 2) - 12


def degree8_census(g: Graph) -> dict:
    """Degree-8 count, minimum degree and the edge-counting argument.

    With minimum degree at least 8 and ``c`` vertices of degree exactly 8,
    ``|E| >= (9n - c) / 2``. For ``c <= 24`` that already reaches the
    ``9n/2 - 12`` budget, which is what rules out a minimal counterexample
    with few degree-8 vertices.
    """
    degs = g.degrees()
    c = sum(1 for d in degs if d == 8)
    min_deg = min(degs) if degs else 0
    budget = edge_budget(g.n)
    lower = Fraction(9 * g.n - c, 2) if degs and min_deg >= 8 else None
    return {
        "n": g.n,
        "edges": g.edge_count,
        "degree8": c,
        "min_degree": min_deg,
        "edge_budget": float(budget),
        "below_budget": g.edge_count < budget,
        "counting_lower_bound": float(lower) if lower is not None else None,
        "forces_contradiction": bool(degs) and min_deg >= 8 and c <= 24,
    }


def k5_pattern_report(g: Graph) -> dict:
    """Pairwise K5 intersections, the first triple covering 12+ vertices, and K6- presence."""
    k5s = enumerate_k5(g)
    sets = [frozenset(c) for c in k5s]
    hist: Counter = Counter()
    k6_minus = None
    for a, b in itertools.combinations(sets, 2):
        size = len(a & b)
        hist[size] += 1
        # two K5 on 4 shared vertices span a K6 minus at most one edge, and conversely
        if size == 4 and k6_minus is None:
            k6_minus = sorted(a | b)
    triple = None
    union = None
    for i, j, k in itertools.combinations(range(len(sets)), 3):
        size = len(sets[i] | sets[j] | sets[k])
        if size >= 12:
            triple = [list(k5s[i]), list(k5s[j]), list(k5s[k])]
            union = size
            break
    return {
        "k5": [list(c) for c in k5s],
        "intersection_histogram": {str(s): hist[s] for s in sorted(hist)},
        "triple": triple,
        "triple_union": union,
        "k6_minus": k6_minus,
    }
