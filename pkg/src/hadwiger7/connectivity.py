"""Vertex connectivity, separations and Menger path systems.

Everything runs on unit vertex capacities in the usual split digraph: vertex
``v`` becomes an arc ``in(v) -> out(v)`` and each edge ``uv`` becomes the two
arcs ``out(u) -> in(v)`` and ``out(v) -> in(u)``.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Literal

from .errors import GraphInputError
from .graph import Graph, bits, induced_subgraph, to_mask

_BIG = 1 << 30


@dataclass(frozen=True)
class Separation:
    """A pair ``(A, B)`` covering ``V`` with no edge between ``A - B`` and ``B - A``."""

    a: frozenset[int]
    b: frozenset[int]

    @property
    def separator(self) -> frozenset[int]:
        return self.a & self.b

    @property
    def order(self) -> int:
        return len(self.a & self.b)

    def is_valid(self, g: Graph) -> bool:
        if self.a | self.b != frozenset(range(g.n)):
            return False
        left = to_mask(self.a - self.b)
        right = to_mask(self.b - self.a)
        return all(not g.masks[v] & right for v in bits(left))


@dataclass(frozen=True)
class PathSystem:
    """Result of a Menger query.

    ``paths`` holds the paths (each a vertex list) when ``k`` of them exist;
    otherwise ``paths`` is ``None`` and ``separator`` is a set of fewer than
    ``k`` vertices meeting every S-T path.
    """

    paths: list[list[int]] | None
    separator: frozenset[int] | None = None

    def __bool__(self) -> bool:
        return self.paths is not None


class _FlowNet:
    """Residual network with BFS augmentation (Edmonds-Karp)."""

    def __init__(self, size: int) -> None:
        self.cap: list[dict[int, int]] = [dict() for _ in range(size)]
        self.orig: dict[tuple[int, int], int] = {}

    def add(self, a: int, b: int, c: int) -> None:
        self.cap[a][b] = self.cap[a].get(b, 0) + c
        self.orig[(a, b)] = self.orig.get((a, b), 0) + c
        self.cap[b].setdefault(a, 0)

    def max_flow(self, s: int, t: int, limit: int = _BIG) -> int:
        flow = 0
        cap = self.cap
        while flow < limit:
            parent = {s: s}
            queue = deque([s])
            while queue and t not in parent:
                a = queue.popleft()
                for b, c in cap[a].items():
                    if c > 0 and b not in parent:
                        parent[b] = a
                        queue.append(b)
            if t not in parent:
                break
            push = limit - flow
            b = t
            while b != s:
                a = parent[b]
                push = min(push, cap[a][b])
                b = a
            b = t
            while b != s:
                a = parent[b]
                cap[a][b] -= push
                cap[b][a] += push
                b = a
            flow += push
        return flow

    def reachable(self, s: int) -> set[int]:
        seen = {s}
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for b, c in self.cap[a].items():
                if c > 0 and b not in seen:
                    seen.add(b)
                    queue.append(b)
        return seen


def _split_network(g: Graph, big: Iterable[int] = (), skip: int = 0) -> _FlowNet:
    big = set(big)
    net = _FlowNet(2 * g.n + 2)
    for v in range(g.n):
        if skip >> v & 1:
            continue
        net.add(2 * v, 2 * v + 1, _BIG if v in big else 1)
    for u, v in g.edges():
        if (skip >> u | skip >> v) & 1:
            continue
        net.add(2 * u + 1, 2 * v, _BIG)
        net.add(2 * v + 1, 2 * u, _BIG)
    return net


def local_connectivity(g: Graph, s: int, t: int, limit: int = _BIG) -> int:
    """Maximum number of internally disjoint s-t paths for non-adjacent ``s != t``."""
    if s == t or g.has_edge(s, t):
        raise GraphInputError("local connectivity needs two distinct non-adjacent vertices")
    net = _split_network(g, big=(s, t))
    return net.max_flow(2 * s + 1, 2 * t, limit)


def _connectivity_value(g: Graph) -> int:
    n = g.n
    if n <= 1:
        return 0
    if len(g.components()) > 1:
        return 0
    best = n - 1
    for i in range(n):
        if i > best:
            break
        for j in range(n):
            if j == i or g.has_edge(i, j):
                continue
            if best == 0:
                return 0
            best = min(best, local_connectivity(g, i, j, limit=best))
    return best


def is_separator(g: Graph, cut: Iterable[int]) -> bool:
    rest = g.vertex_mask & ~to_mask(cut)
    return bool(rest) and len(g.components(rest)) > 1


def _lex_least_separator(g: Graph, k: int) -> frozenset[int]:
    if math.comb(g.n, k) <= 50_000:
        for combo in itertools.combinations(range(g.n), k):
            if is_separator(g, combo):
                return frozenset(combo)
        raise AssertionError("no separator of the computed order")
    # Greedy: extend the prefix by the smallest vertex some minimum separator still contains.
    chosen: list[int] = []
    full = g.vertex_mask
    for _ in range(k):
        start = chosen[-1] + 1 if chosen else 0
        for x in range(start, g.n):
            removed = to_mask(chosen) | 1 << x
            rest = full & ~removed
            sub, _ = induced_subgraph(g, bits(rest))
            need = k - len(chosen) - 1
            if need == 0:
                if len(sub.components()) > 1:
                    chosen.append(x)
                    break
            elif sub.edge_count < sub.n * (sub.n - 1) // 2 and _connectivity_value(sub) == need:
                chosen.append(x)
                break
        else:
            raise AssertionError("greedy separator extension failed")
    return frozenset(chosen)


def vertex_connectivity(g: Graph) -> tuple[int, frozenset[int] | Literal["complete"]]:
    """Return ``(k, witness)``; the witness is the lexicographically least
    minimum vertex cut, or ``"complete"`` when ``g`` is a complete graph."""
    if g.edge_count == g.n * (g.n - 1) // 2:
        return max(g.n - 1, 0), "complete"
    k = _connectivity_value(g)
    return k, _lex_least_separator(g, k)


def minimum_separation(g: Graph) -> Separation | None:
    """A minimum-order separation ``(A, B)`` with both sides proper, or None for cliques."""
    k, cut = vertex_connectivity(g)
    if cut == "complete":
        return None
    rest = g.vertex_mask & ~to_mask(cut)
    first = g.components(rest)[0]
    a = frozenset(bits(first)) | cut
    b = frozenset(bits(rest & ~first)) | cut
    return Separation(a, b)


def is_k_connected(g: Graph, k: int) -> bool:
    if g.n <= k:
        return False
    if g.edge_count == g.n * (g.n - 1) // 2:
        return True
    return _connectivity_value(g) >= k


def _shortcut(g: Graph, path: list[int]) -> list[int]:
    out = [path[0]]
    i = 0
    while i < len(path) - 1:
        nxt = i + 1
        for j in range(len(path) - 1, i + 1, -1):
            if g.has_edge(path[i], path[j]):
                nxt = j
                break
        out.append(path[nxt])
        i = nxt
    return out


def disjoint_paths(g: Graph, sources: Iterable[int], targets: Iterable[int], k: int) -> PathSystem:
    """Find ``k`` disjoint S-T paths, or a separator of order ``< k``.

    Paths are pairwise vertex-disjoint, except that a singleton ``S`` (or
    ``T``) is shared by all paths, giving a fan. A vertex of ``S & T`` is a
    path of length zero. Each path meets ``S`` only at its first vertex and
    ``T`` only at its last one, has no chords, and the list is sorted
    shortest first.
    """
    S = sorted(set(sources))
    T = sorted(set(targets))
    for v in S + T:
        if not 0 <= v < g.n:
            raise GraphInputError(f"vertex {v} not in graph")
    if k <= 0:
        return PathSystem([])
    shared = sorted(set(S) & set(T))
    s_only = [v for v in S if v not in shared]
    t_only = [v for v in T if v not in shared]
    zero = [[v] for v in shared][:k]
    if len(zero) == k or not s_only or not t_only:
        if len(zero) == k:
            return PathSystem(zero)
        return PathSystem(None, frozenset(shared))
    fan_s = len(S) == 1
    fan_t = len(T) == 1
    need = k - len(zero)
    skip = to_mask(shared)
    direct: list[list[int]] = []
    work = g
    if fan_s and fan_t and g.has_edge(S[0], T[0]):
        direct = [[S[0], T[0]]]
        need -= 1
        masks = list(g.masks)
        masks[S[0]] &= ~(1 << T[0])
        masks[T[0]] &= ~(1 << S[0])
        work = Graph(g.n, tuple(masks), g.labels)
        if need == 0:
            return PathSystem(zero + direct)
    big = ([S[0]] if fan_s else []) + ([T[0]] if fan_t else [])
    net = _split_network(work, big=big, skip=skip)
    src, snk = 2 * g.n, 2 * g.n + 1
    for v in s_only:
        net.add(src, 2 * v, _BIG if fan_s else 1)
    for v in t_only:
        net.add(2 * v + 1, snk, _BIG if fan_t else 1)
    value = net.max_flow(src, snk, need)
    if value < need:
        seen = net.reachable(src)
        cut = {v for v in range(g.n) if 2 * v in seen and 2 * v + 1 not in seen}
        if not fan_s:
            cut |= {v for v in s_only if 2 * v not in seen}
        if not fan_t:
            cut |= {v for v in t_only if 2 * v + 1 in seen}
        return PathSystem(None, frozenset(cut | set(shared)))
    paths = _decompose(net, src, snk, set(s_only), set(t_only), value)
    paths = [_shortcut(work, p) for p in paths]
    return PathSystem(sorted(zero + direct + paths, key=lambda p: (len(p), p)))


def _decompose(net: _FlowNet, src: int, snk: int, S: set[int], T: set[int], count: int) -> list[list[int]]:
    flow = {arc: c - net.cap[arc[0]][arc[1]] for arc, c in net.orig.items()}
    paths = []
    for _ in range(count):
        node = src
        walk = []
        while node != snk:
            nxt = min(b for b in net.cap[node] if flow.get((node, b), 0) > 0)
            flow[(node, nxt)] -= 1
            if nxt != snk and nxt % 2 == 0:
                v = nxt // 2
                if v in walk:
                    del walk[walk.index(v) + 1:]
                else:
                    walk.append(v)
            node = nxt
        start = max(i for i, v in enumerate(walk) if v in S)
        walk = walk[start:]
        end = min(i for i, v in enumerate(walk) if v in T)
        paths.append(walk[: end + 1])
    return paths
