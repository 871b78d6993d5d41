"""Stable sets, cliques and small fixed subgraphs."""

from __future__ import annotations

from ..errors import PreconditionError
from ..graph import Graph, PatternGraph, as_graph, bits, to_mask


def has_stable_set(g: Graph, k: int) -> list[int] | None:
    """The lexicographically first stable set of size ``k``, or None."""
    if k <= 0:
        return []
    chosen: list[int] = []

    def rec(cand: int) -> bool:
        if len(chosen) == k:
            return True
        if cand.bit_count() < k - len(chosen):
            return False
        for v in bits(cand):
            chosen.append(v)
            rest = cand & ~((1 << (v + 1)) - 1) & ~g.masks[v]
            if rec(rest):
                return True
            chosen.pop()
        return False

    return list(chosen) if rec(g.vertex_mask) else None


def independence_number(g: Graph) -> int:
    k = 0
    while has_stable_set(g, k + 1) is not None:
        k += 1
    return k


def cliques_of_size(g: Graph, k: int) -> list[tuple[int, ...]]:
    """All ``k``-cliques as sorted tuples, in lexicographic order."""
    out: list[tuple[int, ...]] = []
    if k <= 0:
        return [()]

    def rec(prefix: tuple[int, ...], cand: int) -> None:
        if len(prefix) == k:
            out.append(prefix)
            return
        if cand.bit_count() < k - len(prefix):
            return
        for v in bits(cand):
            rec(prefix + (v,), cand & g.masks[v] & ~((1 << (v + 1)) - 1))

    rec((), g.vertex_mask)
    return out


def first_clique(g: Graph, k: int) -> tuple[int, ...] | None:
    found: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], cand: int) -> bool:
        if len(prefix) == k:
            found.append(prefix)
            return True
        if cand.bit_count() < k - len(prefix):
            return False
        for v in bits(cand):
            if rec(prefix + (v,), cand & g.masks[v] & ~((1 << (v + 1)) - 1)):
                return True
        return False

    return found[0] if rec((), g.vertex_mask) else None


def find_triangle_in_alpha2(g: Graph) -> tuple[int, int, int]:
    """A triangle in a graph on at least 6 vertices without a stable triple.

    Ramsey's R(3,3) = 6 guarantees one exists.
    """
    if g.n < 6:
        raise PreconditionError("need at least 6 vertices (R(3,3) = 6)")
    if has_stable_set(g, 3) is not None:
        raise PreconditionError("graph has a stable set of size 3")
    tri = first_clique(g, 3)
    if tri is None:
        raise AssertionError("Ramsey guarantee violated")
    return tri  # type: ignore[return-value]


def enumerate_k5(g: Graph) -> list[tuple[int, ...]]:
    return cliques_of_size(g, 5)


def contains_fixed_subgraph(pattern: PatternGraph | Graph, g: Graph) -> dict[int, int] | None:
    """An injective map of pattern vertices into ``g`` that keeps every pattern edge."""
    pat = as_graph(pattern)
    if pat.n > g.n or pat.edge_count > g.edge_count:
        return None
    pdeg = pat.degrees()
    order: list[int] = []
    left = set(range(pat.n))
    while left:
        placed = to_mask(order)
        p = max(left, key=lambda q: ((pat.masks[q] & placed).bit_count(), pdeg[q], -q))
        order.append(p)
        left.remove(p)
    pos = {p: i for i, p in enumerate(order)}
    earlier = [[q for q in bits(pat.masks[p]) if pos[q] < pos[p]] for p in range(pat.n)]
    gdeg = g.degrees()
    ok = [to_mask(v for v in range(g.n) if gdeg[v] >= pdeg[p]) for p in range(pat.n)]
    image = [0] * pat.n

    def rec(i: int, used: int) -> bool:
        if i == len(order):
            return True
        p = order[i]
        cand = ok[p] & ~used
        for q in earlier[p]:
            cand &= g.masks[image[q]]
        for v in bits(cand):
            image[p] = v
            if rec(i + 1, used | 1 << v):
                return True
        return False

    if rec(0, 0):
        return {p: image[p] for p in range(pat.n)}
    return None
