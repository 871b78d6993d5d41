"""Immutable simple graphs on dense vertex indices, stored as adjacency bitmasks.

All minor-forming operations (deletion, contraction, identification) return
new :class:`Graph` values; nothing here mutates its input.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Sequence

from .errors import GraphInputError


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph.

    ``masks[v]`` is the neighbourhood of ``v`` as a bitmask. ``labels`` names
    each vertex; merged vertices carry the tuple of the labels they absorbed,
    so certificates computed on a reduced graph can be traced back.
    """

    n: int
    masks: tuple[int, ...]
    labels: tuple[Hashable, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(self.n)))

    # -- queries -----------------------------------------------------------

    @property
    def adj(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(bits(m)) for m in self.masks)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.masks[v]))

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.masks]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.masks) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.masks[u] >> (u + 1) << (u + 1))]

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        mask = to_mask(vs)
        return all((self.masks[v] | 1 << v) & mask == mask for v in vs)

    def is_stable(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        mask = to_mask(vs)
        return all(not self.masks[v] & mask for v in vs)

    def is_connected(self, mask: int | None = None) -> bool:
        """Whether the subgraph induced by ``mask`` (default: all) is connected."""
        if mask is None:
            mask = self.vertex_mask
        if not mask:
            return True
        return self.component_of(mask & -mask, mask) == mask

    def component_of(self, seed: int, within: int) -> int:
        """Bitmask of the component of ``within`` containing the seed bitmask."""
        reached = seed
        frontier = seed
        masks = self.masks
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= masks[v]
            grow &= within & ~reached
            reached |= grow
            frontier = grow
        return reached

    def components(self, mask: int | None = None) -> list[int]:
        if mask is None:
            mask = self.vertex_mask
        out = []
        while mask:
            comp = self.component_of(mask & -mask, mask)
            out.append(comp)
            mask &= ~comp
        return out

    def origin(self, v: int) -> frozenset:
        """Flattened set of original labels merged into vertex ``v``."""
        return frozenset(_flatten(self.labels[v]))

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def _flatten(label) -> Iterator[Hashable]:
    if isinstance(label, tuple):
        for part in label:
            yield from _flatten(part)
    else:
        yield label


# -- constructors -------------------------------------------------------------


def from_edge_list(n: int, edges: Iterable[Sequence[int]], labels: Sequence[Hashable] | None = None) -> Graph:
    """Build a simple graph; duplicate and reversed pairs collapse, loops are rejected."""
    if n < 0:
        raise GraphInputError(f"negative vertex count {n}")
    masks = [0] * n
    for edge in edges:
        u, v = int(edge[0]), int(edge[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphInputError(f"self-loop at vertex {u}")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(n, tuple(masks), tuple(labels) if labels is not None else ())


def from_masks(masks: Sequence[int], labels: Sequence[Hashable] | None = None) -> Graph:
    return Graph(len(masks), tuple(masks), tuple(labels) if labels is not None else ())


def from_networkx(g) -> Graph:
    nodes = list(g.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return from_edge_list(len(nodes), [(index[u], index[v]) for u, v in g.edges() if u != v])


# -- minor-forming operations ------------------------------------------------


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices``; returns it with ``new index -> old index``."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphInputError(f"vertex {v} not in graph")
    pos = {v: i for i, v in enumerate(keep)}
    masks = []
    for v in keep:
        masks.append(to_mask(pos[w] for w in bits(g.masks[v]) if w in pos))
    return Graph(len(keep), tuple(masks), tuple(g.labels[v] for v in keep)), keep


def delete_vertices(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    drop = set(vertices)
    return induced_subgraph(g, (v for v in range(g.n) if v not in drop))


def identify_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    """Merge ``vertices`` into one vertex adjacent to the union of their neighbourhoods."""
    return identify_with_map(g, vertices)[0]


def identify_with_map(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Like :func:`identify_vertices`, also returning ``old index -> new index``.

    The merged vertex takes the position of the smallest merged index; the
    other vertices keep their relative order.
    """
    group = sorted(set(vertices))
    if len(group) < 2:
        raise GraphInputError("identification needs at least two vertices")
    for v in group:
        if not 0 <= v < g.n:
            raise GraphInputError(f"vertex {v} not in graph")
    rep = group[0]
    gset = set(group)
    old_to_new = []
    nxt = 0
    for v in range(g.n):
        if v in gset and v != rep:
            old_to_new.append(-1)
        else:
            old_to_new.append(nxt)
            nxt += 1
    for v in group[1:]:
        old_to_new[v] = old_to_new[rep]
    merged = old_to_new[rep]
    masks = [0] * nxt
    for u, v in g.edges():
        a, b = old_to_new[u], old_to_new[v]
        if a != b:
            masks[a] |= 1 << b
            masks[b] |= 1 << a
    labels = [None] * nxt
    for v in range(g.n):
        if v not in gset:
            labels[old_to_new[v]] = g.labels[v]
    labels[merged] = tuple(g.labels[v] for v in group)
    return Graph(nxt, tuple(masks), tuple(labels)), old_to_new


def contract_edge(g: Graph, edge: Sequence[int]) -> Graph:
    u, v = edge
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise GraphInputError(f"edge ({u}, {v}) not present")
    return identify_vertices(g, (u, v))


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~m & ~(1 << v) for v, m in enumerate(g.masks)), g.labels)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    return from_edge_list(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        offset += h.n
    return from_edge_list(offset, edges)


# -- named graphs --------------------------------------------------------------


def complete(t: int) -> Graph:
    return from_edge_list(t, itertools.combinations(range(t), 2))


def complete_minus(t: int) -> Graph:
    """K_t with the edge (0, 1) removed."""
    return from_edge_list(t, [e for e in itertools.combinations(range(t), 2) if e != (0, 1)])


def complete_multipartite(*parts: int) -> Graph:
    owner = [i for i, size in enumerate(parts) for _ in range(size)]
    n = len(owner)
    return from_edge_list(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if owner[u] != owner[v]])


def cycle(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def circulant(n: int, jumps: Iterable[int]) -> Graph:
    jumps = list(jumps)
    return from_edge_list(n, [(i, (i + j) % n) for i in range(n) for j in jumps if j % n])


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def wheel_over(rim: Graph) -> Graph:
    """Add a hub adjacent to every vertex of ``rim``; the hub is the last vertex."""
    hub = rim.n
    return from_edge_list(rim.n + 1, rim.edges() + [(v, hub) for v in range(rim.n)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def icosahedron() -> Graph:
    return from_networkx(__import__("networkx").icosahedral_graph())


# -- pattern catalog -----------------------------------------------------------


@dataclass(frozen=True)
class PatternGraph:
    """A graph tagged with its catalog name (``K5``, ``K7-``, ``K33``, ``C8_12``, ``K2222``)."""

    tag: str
    graph: Graph

    @property
    def n(self) -> int:
        return self.graph.n


def pattern(tag: str) -> PatternGraph:
    """Look up a catalog pattern by tag; accepts ``Kt``, ``Kt-``, ``K33``, ``C8_12``, ``K2222``."""
    key = tag.replace("minus", "-").replace(",", "").replace("_{", "").upper()
    if key in ("K33", "K3,3"):
        return PatternGraph("K33", complete_multipartite(3, 3))
    if key == "K2222":
        return PatternGraph("K2222", complete_multipartite(2, 2, 2, 2))
    if key in ("C8_12", "C812"):
        return PatternGraph("C8_12", circulant(8, (1, 2)))
    if key.startswith("K"):
        body = key[1:]
        minus = body.endswith("-")
        body = body.rstrip("-")
        if body.isdigit():
            t = int(body)
            if minus:
                return PatternGraph(f"K{t}-", complete_minus(t))
            return PatternGraph(f"K{t}", complete(t))
    raise GraphInputError(f"unknown pattern {tag!r}")


def as_graph(g: Graph | PatternGraph) -> Graph:
    return g.graph if isinstance(g, PatternGraph) else g
