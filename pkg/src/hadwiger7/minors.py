"""Exact minor and rooted-minor containment with checkable branch-set models.

The search works on a quotient of the host. Every current vertex stands for
a connected set of host vertices (its *members*), and each step either
deletes a current vertex, merges it into a neighbour (an edge contraction),
or *fixes* it, declaring its member set a finished branch set. A model exists
iff some sequence of steps reaches a quotient that contains the pattern as a
subgraph using every fixed vertex, so exploring all three options at each
branching vertex is exhaustive.

Pruning, all of it sound:

* vertex and edge counts, and a degree-domination check on fixed vertices
  (the degree of a fixed vertex can only go down);
* forced moves for unconstrained vertices of degree below ``min_degree(H)``;
* for connected patterns, only one component of the quotient is kept;
* a non-planar pattern is never a minor of a planar host;
* clique separators of order below the pattern's connectivity split the
  host into pieces that are searched independently;
* failed states are memoised.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .errors import BudgetExceeded, GraphInputError
from .connectivity import is_k_connected
from .graph import Graph, PatternGraph, as_graph, bits, delete_vertices, induced_subgraph, to_mask

DEFAULT_BUDGET = 64


@dataclass(frozen=True)
class MinorModel:
    """Branch sets in a host graph, one per pattern vertex."""

    pattern: PatternGraph | Graph
    branch_sets: dict[int, frozenset[int]]

    @property
    def pattern_graph(self) -> Graph:
        return as_graph(self.pattern)

    def to_json(self) -> dict:
        tag = self.pattern.tag if isinstance(self.pattern, PatternGraph) else None
        pat = as_graph(self.pattern)
        return {
            "pattern": {"tag": tag, "n": pat.n, "edges": [list(e) for e in pat.edges()]},
            "branch_sets": {str(p): sorted(s) for p, s in sorted(self.branch_sets.items())},
        }

    @classmethod
    def from_json(cls, data: dict | str) -> MinorModel:
        from .graph import from_edge_list, pattern as lookup

        if isinstance(data, str):
            data = json.loads(data)
        pat = data["pattern"]
        if isinstance(pat, str):
            pg: PatternGraph | Graph = lookup(pat)
        elif pat.get("tag"):
            pg = lookup(pat["tag"])
        else:
            pg = from_edge_list(pat["n"], [tuple(e) for e in pat["edges"]])
        sets = {int(p): frozenset(vs) for p, vs in data["branch_sets"].items()}
        return cls(pg, sets)


@dataclass(frozen=True)
class RootSpec:
    """Constraints for a rooted search.

    ``roots[p] = v`` forces host vertex ``v`` into the branch set of pattern
    vertex ``p``; ``must_intersect[p]`` is a host vertex set the branch set of
    ``p`` has to meet.
    """

    roots: Mapping[int, int] = field(default_factory=dict)
    must_intersect: Mapping[int, frozenset[int]] = field(default_factory=dict)


def verify_model(host: Graph, model: MinorModel) -> bool:
    """Check a model against the host alone: disjoint, connected, edges realised."""
    pat = model.pattern_graph
    sets = model.branch_sets
    if set(sets) != set(range(pat.n)):
        return False
    masks = {}
    taken = 0
    for p in range(pat.n):
        vs = sets[p]
        if not vs or any(not (isinstance(v, int) and 0 <= v < host.n) for v in vs):
            return False
        m = to_mask(vs)
        if m & taken:
            return False
        taken |= m
        if not host.is_connected(m):
            return False
        masks[p] = m
    for p, q in pat.edges():
        reach = 0
        for v in bits(masks[p]):
            reach |= host.masks[v]
        if not reach & masks[q]:
            return False
    return True


@lru_cache(maxsize=64)
def _pattern_profile(masks: tuple[int, ...]) -> tuple[int, bool, int]:
    """(vertex connectivity, is complete, apex number) for a pattern.

    The apex number is the least number of vertices whose removal leaves a
    planar graph. It cannot increase when taking minors.
    """
    from .connectivity import vertex_connectivity

    g = Graph(len(masks), masks)
    k, _ = vertex_connectivity(g)
    n = g.n
    return k, g.edge_count == n * (n - 1) // 2, apex_number(g)


def apex_number(g: Graph, limit: int | None = None) -> int:
    """Least ``|X|`` with ``g - X`` planar; stops early and returns ``limit`` if reached."""
    from .planarity import is_planar_fast

    top = g.n if limit is None else min(limit, g.n)
    for size in range(top):
        for drop in itertools.combinations(range(g.n), size):
            if is_planar_fast(delete_vertices(g, drop)[0]):
                return size
    return top


def _apex_excludes(pat_apex: int, host: Graph) -> bool:
    """True when the host's apex number is below the pattern's, so no model exists."""
    if pat_apex == 0:
        return False
    return apex_number(host, limit=min(pat_apex, 3)) < pat_apex


class _Search:
    def __init__(self, pat: Graph, host: Graph, roots: Mapping[int, int], must: Mapping[int, frozenset[int]], max_nodes: int | None):
        self.pat = pat
        self.host = host
        self.nh = pat.n
        self.eh = pat.edge_count
        self.pdeg = pat.degrees()
        self.pdeg_sorted = sorted(self.pdeg)
        self.delta = min(self.pdeg) if self.pdeg else 0
        self.connected_pattern = pat.n > 0 and pat.is_connected()
        self.root_p = [-1] * host.n
        for p, v in roots.items():
            self.root_p[v] = p
        self.roots = dict(roots)
        self.must = {p: to_mask(s) for p, s in must.items()}
        self.cmask = to_mask(roots.values())
        for m in self.must.values():
            self.cmask |= m
        self.constrained = bool(self.cmask)
        # pattern order for embedding: high degree first, then neighbours of placed vertices
        order = []
        left = set(range(pat.n))
        while left:
            placed = to_mask(order)
            v = max(left, key=lambda p: ((pat.masks[p] & placed).bit_count(), self.pdeg[p], -p))
            order.append(v)
            left.remove(v)
        self.order = order
        self.earlier = [to_mask(q for q in bits(pat.masks[p]) if order.index(q) < order.index(p)) for p in range(pat.n)]
        self.nonplanar_pattern = _pattern_profile(pat.masks)[2] > 0
        self.memo: set = set()
        self.nodes = 0
        self.max_nodes = max_nodes

    def run(self) -> dict[int, frozenset[int]] | None:
        g = self.host
        members = [1 << v for v in range(g.n)]
        rootp = list(self.root_p)
        found = self._search(g.vertex_mask, list(g.masks), members, 0, rootp)
        if found is None:
            return None
        return {p: frozenset(bits(m)) for p, m in found.items()}

    # -- primitive moves ---------------------------------------------------

    @staticmethod
    def _delete(alive: int, adj: list[int], v: int) -> int:
        for x in bits(adj[v]):
            adj[x] &= ~(1 << v)
        return alive & ~(1 << v)

    @staticmethod
    def _merge(alive: int, adj: list[int], members: list[int], rootp: list[int], v: int, w: int) -> int:
        vb, wb = 1 << v, 1 << w
        nv = adj[v]
        adj[w] = (adj[w] | nv) & ~vb & ~wb
        for x in bits(nv & ~wb):
            adj[x] = (adj[x] & ~vb) | wb
        members[w] |= members[v]
        if rootp[v] >= 0:
            rootp[w] = rootp[v]
        return alive & ~vb

    def _reduce(self, alive: int, adj: list[int], members: list[int], fixed: int, rootp: list[int]) -> int:
        delta = self.delta
        if delta < 1:
            return alive
        changed = True
        while changed:
            changed = False
            for v in bits(alive & ~fixed):
                if not alive >> v & 1 or members[v] & self.cmask:
                    continue
                d = adj[v].bit_count()
                if d == 0 or (d == 1 and delta >= 2):
                    alive = self._delete(alive, adj, v)
                    changed = True
                elif d == 2 and delta >= 3:
                    a, b = bits(adj[v])
                    if adj[a] >> b & 1:
                        alive = self._delete(alive, adj, v)
                    elif not fixed >> a & 1:
                        alive = self._merge(alive, adj, members, rootp, v, a)
                    elif not fixed >> b & 1:
                        alive = self._merge(alive, adj, members, rootp, v, b)
                    else:
                        alive = self._delete(alive, adj, v)
                    changed = True
        return alive

    # -- feasibility -------------------------------------------------------

    def _fixed_ok(self, adj: list[int], fixed: int, rootp: list[int]) -> bool:
        fdeg = sorted(adj[v].bit_count() for v in bits(fixed))
        if len(fdeg) > self.nh:
            return False
        for d, need in zip(fdeg, self.pdeg_sorted):
            if d < need:
                return False
        for v in bits(fixed):
            p = rootp[v]
            if p >= 0 and adj[v].bit_count() < self.pdeg[p]:
                return False
        return True

    def _must_ok(self, alive: int, members: list[int]) -> bool:
        if not self.must:
            return True
        pool = 0
        for v in bits(alive):
            pool |= members[v]
        return all(pool & m for m in self.must.values())

    def _embed(self, alive: int, adj: list[int], members: list[int], fixed: int, rootp: list[int]) -> dict[int, int] | None:
        """Injective map pattern -> current vertices along edges, covering ``fixed``."""
        pat = self.pat
        order = self.order
        earlier = self.earlier
        nh = self.nh
        rooted_reps = 0
        rep_of_root = {}
        for v in bits(alive):
            if rootp[v] >= 0:
                rooted_reps |= 1 << v
                rep_of_root[rootp[v]] = v
        if len(rep_of_root) < len(self.roots):
            return None
        deg_ok = {}
        for p in range(nh):
            need = self.pdeg[p]
            if p in rep_of_root:
                v = rep_of_root[p]
                ok = 1 << v if adj[v].bit_count() >= need else 0
            else:
                ok = 0
                for v in bits(alive & ~rooted_reps):
                    if adj[v].bit_count() >= need:
                        ok |= 1 << v
            if p in self.must:
                mm = self.must[p]
                ok = to_mask(v for v in bits(ok) if members[v] & mm)
            if not ok:
                return None
            deg_ok[p] = ok
        image = [0] * nh
        fixed_count = fixed.bit_count()

        def place(i: int, used: int, fixed_left: int) -> bool:
            if i == nh:
                return True
            if fixed_left > nh - i:
                return False
            p = order[i]
            cand = deg_ok[p] & ~used
            for q in bits(earlier[p]):
                cand &= adj[image[q]]
            for v in bits(cand):
                image[p] = v
                if place(i + 1, used | 1 << v, fixed_left - (fixed >> v & 1)):
                    return True
            return False

        if place(0, 0, fixed_count):
            return {p: image[p] for p in range(nh)}
        return None

    # -- search ------------------------------------------------------------

    def _search(self, alive: int, adj: list[int], members: list[int], fixed: int, rootp: list[int]):
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceeded(f"minor search exceeded {self.max_nodes} nodes")
        alive = self._reduce(alive, adj, members, fixed, rootp)
        k = alive.bit_count()
        if k < self.nh:
            return None
        edges = sum(adj[v].bit_count() for v in bits(alive)) // 2
        if edges < self.eh:
            return None
        if not self._fixed_ok(adj, fixed, rootp) or not self._must_ok(alive, members):
            return None

        if self.connected_pattern:
            comps = _components(adj, alive)
            if len(comps) > 1:
                keep_mask = fixed | self._root_reps(alive, rootp)
                if keep_mask:
                    holding = [c for c in comps if c & keep_mask]
                    if len(holding) > 1:
                        return None
                    candidates = holding
                else:
                    candidates = [c for c in comps if c.bit_count() >= self.nh]
                for comp in candidates:
                    sub_adj = list(adj)
                    sub_alive = alive
                    for v in bits(alive & ~comp):
                        sub_alive &= ~(1 << v)
                    found = self._search(sub_alive, sub_adj, list(members), fixed, list(rootp))
                    if found is not None:
                        return found
                return None

        key = self._key(alive, adj, members, fixed)
        if key in self.memo:
            return None
        if self.nonplanar_pattern and edges <= 3 * k - 6 and _quotient_planar(adj, alive):
            self.memo.add(key)
            return None

        emb = self._embed(alive, adj, members, fixed, rootp)
        if emb is not None:
            return {p: members[v] for p, v in emb.items()}
        if k == self.nh:
            self.memo.add(key)
            return None

        free = alive & ~fixed
        if not free:
            self.memo.add(key)
            return None
        v = min(bits(free), key=lambda u: (adj[u].bit_count(), u))
        vbit = 1 << v
        nbrs = [w for w in bits(adj[v] & ~fixed)]
        nbrs.sort(key=lambda w: ((adj[v] & adj[w]).bit_count(), w))
        for w in nbrs:
            if rootp[v] >= 0 and rootp[w] >= 0:
                continue
            a2, m2, r2 = list(adj), list(members), list(rootp)
            al2 = self._merge(alive, a2, m2, r2, v, w)
            found = self._search(al2, a2, m2, fixed, r2)
            if found is not None:
                return found
        if rootp[v] < 0:
            a2 = list(adj)
            al2 = self._delete(alive, a2, v)
            found = self._search(al2, a2, list(members), fixed, list(rootp))
            if found is not None:
                return found
        need = self.pdeg[rootp[v]] if rootp[v] >= 0 else self.delta
        if adj[v].bit_count() >= need and fixed.bit_count() < self.nh:
            found = self._search(alive, list(adj), list(members), fixed | vbit, list(rootp))
            if found is not None:
                return found
        self.memo.add(key)
        return None

    def _root_reps(self, alive: int, rootp: list[int]) -> int:
        return to_mask(v for v in bits(alive) if rootp[v] >= 0)

    def _key(self, alive: int, adj: list[int], members: list[int], fixed: int):
        shape = tuple(adj[v] for v in bits(alive))
        if self.constrained:
            return alive, fixed, shape, tuple(members[v] & self.cmask for v in bits(alive))
        return alive, fixed, shape


def _quotient_planar(adj: list[int], alive: int) -> bool:
    import networkx as nx

    q = nx.Graph()
    q.add_nodes_from(bits(alive))
    q.add_edges_from((v, w) for v in bits(alive) for w in bits(adj[v]) if w > v)
    return nx.check_planarity(q)[0]


def _components(adj: list[int], alive: int) -> list[int]:
    out = []
    rest = alive
    while rest:
        seed = rest & -rest
        reached = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= adj[v]
            grow &= rest & ~reached
            reached |= grow
            frontier = grow
        out.append(reached)
        rest &= ~reached
    return out


# -- clique-separator splitting -------------------------------------------------


def _cliques_upto(g: Graph, size: int):
    """Cliques of each order ``0..size``, smallest order first, lexicographic within."""
    yield ()
    level = [((v,), g.masks[v] & ~((1 << (v + 1)) - 1)) for v in range(g.n)]
    for _ in range(size):
        for clique, _cand in level:
            yield clique
        nxt = []
        for clique, cand in level:
            for w in bits(cand):
                nxt.append((clique + (w,), cand & g.masks[w] & ~((1 << (w + 1)) - 1)))
        level = nxt
        if not level:
            return


def clique_separator(g: Graph, max_order: int) -> tuple[tuple[int, ...], list[int]] | None:
    """First clique ``S`` with ``|S| <= max_order`` whose removal disconnects ``g``.

    Returns ``(S, components)`` with components as bitmasks, or None.
    """
    full = g.vertex_mask
    for clique in _cliques_upto(g, max_order):
        rest = full & ~to_mask(clique)
        if not rest:
            continue
        comps = g.components(rest)
        if len(comps) > 1:
            return clique, comps
    return None


# -- public API ------------------------------------------------------------------


def _check_budget(host: Graph, budget: int | None) -> None:
    if budget is not None and host.n > budget:
        raise BudgetExceeded(f"host has {host.n} vertices, above the budget of {budget}")


def find_minor(pattern: PatternGraph | Graph, host: Graph, budget: int | None = DEFAULT_BUDGET, max_nodes: int | None = None) -> MinorModel | None:
    """A model of ``pattern`` in ``host``, or None when exhaustive search finds none."""
    _check_budget(host, budget)
    pat = as_graph(pattern)
    sets = _find_unrooted(pat, host, max_nodes)
    if sets is None:
        return None
    model = MinorModel(pattern, sets)
    assert verify_model(host, model), "minor search produced an invalid model"
    return model


def _find_unrooted(pat: Graph, host: Graph, max_nodes: int | None) -> dict[int, frozenset[int]] | None:
    if pat.n == 0:
        return {}
    if host.n < pat.n or host.edge_count < pat.edge_count:
        return None
    kappa, complete, pat_apex = _pattern_profile(pat.masks)
    if _apex_excludes(pat_apex, host):
        return None
    if pat.n >= 2 and pat.is_connected():
        limit = pat.n - 1 if complete else kappa - 1
        split = None
        if limit >= 0 and not is_k_connected(host, limit + 1):
            split = clique_separator(host, limit)
        if split is not None:
            clique, comps = split
            cmask = to_mask(clique)
            for comp in comps:
                piece, back = induced_subgraph(host, bits(comp | cmask))
                found = _find_unrooted(pat, piece, max_nodes)
                if found is not None:
                    return {p: frozenset(back[v] for v in s) for p, s in found.items()}
            return None
    return _Search(pat, host, {}, {}, max_nodes).run()


def find_rooted_minor(pattern: PatternGraph | Graph, host: Graph, roots: RootSpec, budget: int | None = DEFAULT_BUDGET, max_nodes: int | None = None) -> MinorModel | None:
    """A model whose branch sets honour ``roots``, or None when none exists."""
    _check_budget(host, budget)
    pat = as_graph(pattern)
    for p, v in roots.roots.items():
        if not 0 <= p < pat.n:
            raise GraphInputError(f"pattern vertex {p} does not exist")
        if not 0 <= v < host.n:
            raise GraphInputError(f"root vertex {v} is not in the host")
    if len(set(roots.roots.values())) != len(roots.roots):
        raise GraphInputError("two pattern vertices share a root")
    for p, s in roots.must_intersect.items():
        if not 0 <= p < pat.n or any(not 0 <= v < host.n for v in s):
            raise GraphInputError("must-intersect constraint names missing vertices")
    if pat.n == 0:
        return MinorModel(pattern, {})
    if host.n < pat.n or host.edge_count < pat.edge_count:
        return None
    _, _, pat_apex = _pattern_profile(pat.masks)
    if _apex_excludes(pat_apex, host):
        return None
    sets = _Search(pat, host, roots.roots, roots.must_intersect, max_nodes).run()
    if sets is None:
        return None
    model = MinorModel(pattern, sets)
    assert verify_model(host, model) and respects_roots(model, roots)
    return model


def respects_roots(model: MinorModel, roots: RootSpec) -> bool:
    sets = model.branch_sets
    return all(v in sets[p] for p, v in roots.roots.items()) and all(sets[p] & frozenset(s) for p, s in roots.must_intersect.items())
