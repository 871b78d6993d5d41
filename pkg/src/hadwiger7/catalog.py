"""Isomorphism-free catalogs of small graphs.

Graphs on at most 7 vertices come from the networkx graph atlas. Larger
classes are grown one vertex at a time and deduplicated with nauty
canonical certificates.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Callable, Iterable

import networkx as nx
import pynauty

from .graph import Graph, bits, from_networkx, to_mask


def certificate(g: Graph) -> bytes:
    """nauty canonical certificate; equal iff the graphs are isomorphic."""
    ng = pynauty.Graph(g.n, adjacency_dict={v: list(bits(g.masks[v])) for v in range(g.n)})
    return pynauty.certificate(ng)


@lru_cache(maxsize=1)
def atlas() -> tuple[Graph, ...]:
    """All 1253 graphs on 0..7 vertices, one per isomorphism class."""
    return tuple(from_networkx(h) for h in nx.graph_atlas_g())


def graphs_on(n: int) -> list[Graph]:
    if n <= 7:
        return [g for g in atlas() if g.n == n]
    return list(extend_by_vertex(graphs_on(n - 1)))


def extend_by_vertex(base: Iterable[Graph], allowed: Callable[[Graph, int], bool] | None = None) -> Iterable[Graph]:
    """Every graph obtained by adding one vertex to a graph of ``base``, up to isomorphism.

    ``allowed(g, mask)`` may veto a neighbourhood choice for the new vertex.
    If ``base`` holds all graphs of a hereditary class on ``n`` vertices, the
    output holds all of that class on ``n + 1`` vertices.
    """
    seen: set[bytes] = set()
    for g in base:
        n = g.n
        for size in range(n + 1):
            for combo in itertools.combinations(range(n), size):
                mask = to_mask(combo)
                if allowed is not None and not allowed(g, mask):
                    continue
                masks = list(g.masks)
                for v in combo:
                    masks[v] |= 1 << n
                masks.append(mask)
                h = Graph(n + 1, tuple(masks))
                cert = certificate(h)
                if cert not in seen:
                    seen.add(cert)
                    yield h


def connected_graphs_upto(n: int) -> list[Graph]:
    """All connected graphs on 1..n vertices (n <= 8 is quick)."""
    out = [g for g in atlas() if g.n >= 1 and g.is_connected()]
    if n <= 7:
        return [g for g in out if g.n <= n]
    layer = [g for g in atlas() if g.n == 7]
    for size in range(8, n + 1):
        layer = list(extend_by_vertex(layer))
        out.extend(g for g in layer if g.is_connected())
    return out


def triangle_free_graphs(n: int) -> list[Graph]:
    """All triangle-free graphs on ``n`` vertices up to isomorphism."""

    def no_triangle(g: Graph, mask: int) -> bool:
        return all(not g.masks[v] & mask for v in bits(mask))

    layer = [g for g in atlas() if g.n == min(n, 7) and _triangle_free(g)]
    for _ in range(7, n):
        layer = list(extend_by_vertex(layer, no_triangle))
    return layer


def _triangle_free(g: Graph) -> bool:
    return all(not g.masks[u] & g.masks[v] for u, v in g.edges())
