"""Planarity with checkable witnesses, and exact 4-coloring of planar graphs.

The decision itself is delegated to networkx's left-right planarity test.
Whatever it returns is re-checked here: a rotation system must trace
``v - e + f = 2`` per component, and a Kuratowski witness must be a subgraph
of the input that is a subdivision of K5 or K3,3.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import networkx as nx

from .coloring import exact_k_color, is_proper
from .errors import PreconditionError
from .graph import Graph


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    rotation: dict[int, list[int]] | None = None
    kuratowski: list[tuple[int, int]] | None = None
    kind: str | None = None

    def __bool__(self) -> bool:
        return self.planar

    def __iter__(self):
        witness = self.rotation if self.planar else self.kuratowski
        return iter((self.planar, witness))


def is_planar(g: Graph) -> PlanarityResult:
    """Decide planarity; the witness is a rotation system or a Kuratowski subdivision."""
    planar, cert = nx.check_planarity(g.to_networkx(), counterexample=True)
    if planar:
        rotation = {v: list(cert.neighbors_cw_order(v)) for v in range(g.n)}
        return PlanarityResult(True, rotation=rotation)
    edges = sorted((min(u, v), max(u, v)) for u, v in cert.edges())
    return PlanarityResult(False, kuratowski=edges, kind=kuratowski_kind(g, edges))


def is_planar_fast(g: Graph) -> bool:
    if g.n >= 3 and g.edge_count > 3 * g.n - 6:
        return False
    return nx.check_planarity(g.to_networkx())[0]


def count_faces(rotation: dict[int, list[int]]) -> int:
    """Number of orbits of the face permutation ``(u, v) -> (v, succ_v(u))``."""
    position = {v: {w: i for i, w in enumerate(nbrs)} for v, nbrs in rotation.items()}
    seen = set()
    faces = 0
    for u, nbrs in rotation.items():
        for v in nbrs:
            if (u, v) in seen:
                continue
            faces += 1
            dart = (u, v)
            while dart not in seen:
                seen.add(dart)
                a, b = dart
                ring = rotation[b]
                dart = (b, ring[(position[b][a] + 1) % len(ring)])
    return faces


def verify_embedding(g: Graph, rotation: dict[int, list[int]]) -> bool:
    """Check that ``rotation`` lists each neighbourhood once and satisfies Euler's formula."""
    if set(rotation) != set(range(g.n)):
        return False
    for v in range(g.n):
        if sorted(rotation[v]) != g.neighbors(v) or len(set(rotation[v])) != len(rotation[v]):
            return False
    comps = len(g.components())
    isolated = sum(1 for v in range(g.n) if g.degree(v) == 0)
    return g.n - g.edge_count + count_faces(rotation) + isolated == 2 * comps


def kuratowski_kind(g: Graph, edges: list[tuple[int, int]]) -> str | None:
    """``"K5"`` or ``"K33"`` if ``edges`` is a subdivision of it inside ``g``, else None."""
    if not edges or any(not g.has_edge(u, v) for u, v in edges):
        return None
    if len(set(map(frozenset, edges))) != len(edges):
        return None
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    branch = [v for v, nb in adj.items() if len(nb) != 2]
    if any(len(adj[v]) not in (3, 4) for v in branch):
        return None
    bset = set(branch)
    links: Counter = Counter()
    used_darts = set()
    for b in branch:
        for first in adj[b]:
            if (b, first) in used_darts:
                continue
            prev, cur = b, first
            used_darts.add((b, first))
            while cur not in bset:
                nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
                prev, cur = cur, nxt
            used_darts.add((cur, prev))
            if cur == b:
                return None
            links[frozenset((b, cur))] += 1
    if any(c != 1 for c in links.values()):
        return None
    # every degree-2 vertex must lie on some branch path, i.e. no free cycles
    on_paths = sum(len(adj[v]) for v in branch) // 2
    if on_paths != len(links):
        return None
    if len(branch) == 5 and all(len(adj[v]) == 4 for v in branch) and len(links) == 10:
        return "K5" if _all_interior_reached(adj, bset) else None
    if len(branch) == 6 and all(len(adj[v]) == 3 for v in branch) and len(links) == 9:
        side = {branch[0]: 0}
        stack = [branch[0]]
        link_adj = {v: [w for p in links for w in p if v in p and w != v] for v in branch}
        while stack:
            v = stack.pop()
            for w in link_adj[v]:
                if w not in side:
                    side[w] = 1 - side[v]
                    stack.append(w)
                elif side[w] == side[v]:
                    return None
        if Counter(side.values()) == Counter({0: 3, 1: 3}):
            return "K33" if _all_interior_reached(adj, bset) else None
    return None


def _all_interior_reached(adj: dict[int, list[int]], branch: set[int]) -> bool:
    reached = set(branch)
    stack = list(branch)
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in reached:
                reached.add(w)
                stack.append(w)
    return len(reached) == len(adj)


def four_color_planar(g: Graph) -> list[int]:
    """Proper coloring with at most 4 colors of a planar graph.

    Found by exact DSATUR search; the Four Color Theorem guarantees success.
    """
    if not is_planar_fast(g):
        raise PreconditionError("four_color_planar needs a planar graph")
    colors = exact_k_color(g, 4)
    if colors is None or not is_proper(g, colors):
        raise AssertionError("4-coloring search failed on a planar graph")
    return colors
