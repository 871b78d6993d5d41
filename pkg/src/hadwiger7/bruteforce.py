"""Partition-enumeration minor test, independent of the branch-and-bound engine.

Only usable on tiny hosts: every assignment of host vertices to ``k`` blocks
or to "deleted" is tried, blocks in order of first appearance.
"""

from __future__ import annotations

import itertools

from .graph import Graph, PatternGraph, as_graph, bits


def _connected(masks: tuple[int, ...], block: int) -> bool:
    low = block & -block
    seen = low
    frontier = low
    while frontier:
        v = frontier.bit_length() - 1
        frontier &= ~(1 << v)
        new = masks[v] & block & ~seen
        seen |= new
        frontier |= new
    return seen == block


def has_minor_bruteforce(pattern: PatternGraph | Graph, host: Graph) -> bool:
    pat = as_graph(pattern)
    k = pat.n
    if k == 0:
        return True
    n = host.n
    if k > n or pat.edge_count > host.edge_count:
        return False
    pat_edges = pat.edges()
    perms = list(itertools.permutations(range(k)))
    blocks = [0] * k

    def quotient_ok() -> bool:
        if not all(_connected(host.masks, b) for b in blocks):
            return False
        adj = [0] * k
        for i in range(k):
            reach = 0
            for v in bits(blocks[i]):
                reach |= host.masks[v]
            for j in range(k):
                if j != i and reach & blocks[j]:
                    adj[i] |= 1 << j
        return any(all(adj[p[a]] >> p[b] & 1 for a, b in pat_edges) for p in perms)

    def rec(v: int, top: int) -> bool:
        if n - v < k - top:
            return False
        if v == n:
            return top == k and quotient_ok()
        if rec(v + 1, top):
            return True
        for b in range(min(top + 1, k)):
            blocks[b] |= 1 << v
            found = rec(v + 1, max(top, b + 1))
            blocks[b] &= ~(1 << v)
            if found:
                return True
        return False

    return rec(0, 0)
