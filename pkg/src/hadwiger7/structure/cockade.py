"""(K2,2,2,2, K6, 4)-cockades and the dense-graph classifier.

A cockade is either a single piece (K6 or K2,2,2,2) or two cockades glued
along a shared K4. Every cockade has exactly ``9n/2 - 12`` edges and, by
Jakobsen's theorem, these are the only graphs on at least 7 vertices with
that many edges and no K7- minor.

Recognition splits along any K4 whose removal disconnects the graph. Inside
a cockade a separating K4 is always one of the gluing cliques: every piece
minus one of its K4's stays connected. Each side is then itself a cockade,
so the first separator found is as good as any other and no backtracking
over gluing orders is needed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence, Union

from ..errors import GraphInputError, PreconditionError, TheoremViolation
from ..graph import Graph, bits, complete, complete_multipartite, from_edge_list, induced_subgraph, pattern, to_mask
from ..minors import MinorModel, find_minor
from .stable import cliques_of_size

PIECES = ("K6", "K2222")


@dataclass(frozen=True)
class CockadeLeaf:
    tag: str
    vertices: frozenset[int]

    def to_json(self) -> dict:
        return {"piece": self.tag, "vertices": sorted(self.vertices)}


@dataclass(frozen=True)
class CockadeGluing:
    clique: frozenset[int]
    parts: tuple["CockadeNode", ...]

    def to_json(self) -> dict:
        return {"glue": sorted(self.clique), "parts": [p.to_json() for p in self.parts]}


CockadeNode = Union[CockadeLeaf, CockadeGluing]


def node_vertices(node: CockadeNode) -> frozenset[int]:
    if isinstance(node, CockadeLeaf):
        return node.vertices
    out: frozenset[int] = frozenset()
    for part in node.parts:
        out |= node_vertices(part)
    return out


def leaves(node: CockadeNode) -> list[CockadeLeaf]:
    if isinstance(node, CockadeLeaf):
        return [node]
    return [leaf for part in node.parts for leaf in leaves(part)]


def piece_graph(tag: str) -> Graph:
    if tag == "K6":
        return complete(6)
    if tag == "K2222":
        return complete_multipartite(2, 2, 2, 2)
    raise GraphInputError(f"unknown cockade piece {tag!r}")


def _is_k2222(g: Graph) -> bool:
    if g.n != 8:
        return False
    comp = [((g.vertex_mask & ~m) & ~(1 << v)) for v, m in enumerate(g.masks)]
    return all(c.bit_count() == 1 for c in comp)


def _matches_piece(g: Graph, tag: str) -> bool:
    if tag == "K6":
        return g.n == 6 and g.edge_count == 15
    return _is_k2222(g)


def check_decomposition(g: Graph, root: CockadeNode) -> bool:
    """Verify every decomposition invariant against ``g``."""
    if node_vertices(root) != frozenset(range(g.n)):
        return False
    if 2 * g.edge_count != 9 * g.n - 24:
        return False
    return _check_node(g, root)


def _check_node(g: Graph, node: CockadeNode) -> bool:
    if isinstance(node, CockadeLeaf):
        sub, _ = induced_subgraph(g, node.vertices)
        return _matches_piece(sub, node.tag)
    clique = node.clique
    if len(clique) != 4 or not g.is_clique(clique) or len(node.parts) < 2:
        return False
    sides = [node_vertices(p) for p in node.parts]
    for i, a in enumerate(sides):
        if not clique <= a:
            return False
        for b in sides[i + 1:]:
            if a & b != clique:
                return False
            left, right = to_mask(a - clique), to_mask(b - clique)
            if any(g.masks[v] & right for v in bits(left)):
                return False
    return all(_check_node(g, p) for p in node.parts)


def generate_cockade(recipe: Sequence, rng_seed: int | None = 0) -> tuple[Graph, CockadeNode]:
    """Build a cockade piece by piece.

    ``recipe`` items are piece tags (``"K6"`` / ``"K2222"``) or tuples
    ``(tag, host_clique, piece_clique)`` fixing the gluing explicitly. The
    first item is the starting piece; each later item is glued onto a K4 of
    the graph built so far, chosen with ``random.Random(rng_seed)`` when not
    given.
    """
    if not recipe:
        raise GraphInputError("empty cockade recipe")
    rng = random.Random(rng_seed)
    items = [(item, None, None) if isinstance(item, str) else tuple(item) for item in recipe]
    tag0 = items[0][0]
    first = piece_graph(tag0)
    edges = set(first.edges())
    n = first.n
    decomp: CockadeNode = CockadeLeaf(tag0, frozenset(range(n)))
    for tag, host_q, piece_q in items[1:]:
        piece = piece_graph(tag)
        current = from_edge_list(n, edges)
        if host_q is None:
            host_q = rng.choice(cliques_of_size(current, 4))
        if piece_q is None:
            piece_q = rng.choice(cliques_of_size(piece, 4))
        host_q, piece_q = tuple(host_q), tuple(piece_q)
        if len(set(host_q)) != 4 or not all(0 <= v < n for v in host_q) or not current.is_clique(host_q):
            raise GraphInputError(f"host quadruple {host_q} is not a K4")
        if len(set(piece_q)) != 4 or not all(0 <= v < piece.n for v in piece_q) or not piece.is_clique(piece_q):
            raise GraphInputError(f"piece quadruple {piece_q} is not a K4 of {tag}")
        where = dict(zip(piece_q, host_q))
        for v in range(piece.n):
            if v not in where:
                where[v] = n
                n += 1
        for a, b in piece.edges():
            x, y = where[a], where[b]
            edges.add((min(x, y), max(x, y)))
        leaf = CockadeLeaf(tag, frozenset(where.values()))
        decomp = CockadeGluing(frozenset(host_q), (decomp, leaf))
    return from_edge_list(n, sorted(edges)), decomp


def recognize_cockade(g: Graph) -> CockadeNode | None:
    """A cockade decomposition of ``g``, or None if ``g`` is not a cockade."""
    return _recognize(g, list(range(g.n)))


def _recognize(g: Graph, names: list[int]) -> CockadeNode | None:
    if g.n < 6 or 2 * g.edge_count != 9 * g.n - 24:
        return None
    for tag in PIECES:
        if _matches_piece(g, tag):
            return CockadeLeaf(tag, frozenset(names))
    full = g.vertex_mask
    for q in cliques_of_size(g, 4):
        qmask = to_mask(q)
        comps = g.components(full & ~qmask)
        if len(comps) < 2:
            continue
        parts = []
        for comp in comps:
            sub, back = induced_subgraph(g, bits(comp | qmask))
            node = _recognize(sub, [names[v] for v in back])
            if node is None:
                return None
            parts.append(node)
        return CockadeGluing(frozenset(names[v] for v in q), tuple(parts))
    return None


@dataclass(frozen=True)
class MinorFound:
    model: MinorModel

    def to_json(self) -> dict:
        return {"class": "minor", "model": self.model.to_json()}


@dataclass(frozen=True)
class Cockade:
    decomposition: CockadeNode

    def to_json(self) -> dict:
        return {"class": "cockade", "decomposition": self.decomposition.to_json()}


def meets_jakobsen_threshold(g: Graph) -> bool:
    return g.n >= 7 and 2 * g.edge_count >= 9 * g.n - 24


def jakobsen_classify(g: Graph, budget: int | None = 64) -> MinorFound | Cockade:
    """Certificate that a dense graph has a K7- minor or is a cockade."""
    if not meets_jakobsen_threshold(g):
        raise PreconditionError("needs n >= 7 and at least 9n/2 - 12 edges")
    decomp = recognize_cockade(g)
    if decomp is not None:
        return Cockade(decomp)
    model = find_minor(pattern("K7-"), g, budget=budget)
    if model is not None:
        return MinorFound(model)
    raise TheoremViolation("dense graph with neither a K7- minor nor a cockade structure")
