"""Brute-force oracles, written independently of the package's search code.

They use plain Python sets and itertools only; nothing here imports the
search modules they are used to check.
"""

from __future__ import annotations

import itertools


def adjacency(g):
    """Plain set adjacency from a package Graph (only its edge list is read)."""
    adj = {v: set() for v in range(g.n)}
    for u, v in g.edges():
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _connected(adj, block):
    block = set(block)
    start = next(iter(block))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v] & block:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == block


def _labelings(n, k):
    """Assignments vertex -> block in 0..k-1 or -1 (unused), every block used,
    blocks numbered by first appearance (restricted growth)."""
    labels = [-1] * n

    def rec(i, top):
        if n - i < k - top:
            return
        if i == n:
            if top == k:
                yield tuple(labels)
            return
        labels[i] = -1
        yield from rec(i + 1, top)
        for b in range(min(top + 1, k)):
            labels[i] = b
            yield from rec(i + 1, max(top, b + 1))
        labels[i] = -1

    yield from rec(0, 0)


def minor_bruteforce(pattern_edges, k, g):
    """Whether the k-vertex pattern (edge list) is a minor of g, by enumerating
    every partition of every vertex subset into k connected blocks."""
    adj = adjacency(g)
    pat = [tuple(e) for e in pattern_edges]
    need = len(pat)
    perms = list(itertools.permutations(range(k)))
    for lab in _labelings(g.n, k):
        blocks = [[v for v in range(g.n) if lab[v] == b] for b in range(k)]
        if not all(_connected(adj, b) for b in blocks):
            continue
        quotient = set()
        for u, v in g.edges():
            a, b = lab[u], lab[v]
            if a >= 0 and b >= 0 and a != b:
                quotient.add((min(a, b), max(a, b)))
        if len(quotient) < need:
            continue
        for perm in perms:
            if all((min(perm[p], perm[q]), max(perm[p], perm[q])) in quotient for p, q in pat):
                return True
    return False


def separates(adj, n, cut):
    rest = [v for v in range(n) if v not in cut]
    if len(rest) < 2:
        return False
    return not _connected(adj, rest)


def connectivity_bruteforce(g):
    """Least |S| whose removal disconnects g, or n-1 if no such set exists."""
    adj = adjacency(g)
    for size in range(g.n - 1):
        for cut in itertools.combinations(range(g.n), size):
            if separates(adj, g.n, set(cut)):
                return size
    return max(g.n - 1, 0)


def st_separator_bruteforce(g, s, t):
    """Size of the smallest vertex set avoiding s, t that meets every s-t path
    (s, t non-adjacent)."""
    adj = adjacency(g)
    others = [v for v in range(g.n) if v not in (s, t)]
    for size in range(len(others) + 1):
        for cut in itertools.combinations(others, size):
            cut = set(cut)
            seen = {s}
            stack = [s]
            while stack:
                v = stack.pop()
                for w in adj[v] - cut:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if t not in seen:
                return size
    return None


def independence_number(g):
    adj = adjacency(g)
    best = 0
    for size in range(1, g.n + 1):
        ok = False
        for combo in itertools.combinations(range(g.n), size):
            if all(b not in adj[a] for a, b in itertools.combinations(combo, 2)):
                ok = True
                break
        if not ok:
            break
        best = size
    return best


def chromatic_number(g):
    adj = adjacency(g)
    for k in range(1, g.n + 1):
        for colors in itertools.product(range(k), repeat=g.n):
            if all(colors[u] != colors[v] for u in adj for v in adj[u]):
                return k
    return 0


def rooted_minor_bruteforce(pattern_edges, k, g, roots, must=None):
    """Like minor_bruteforce, but pattern vertex p's block must contain roots[p]
    and meet must[p]."""
    must = must or {}
    adj = adjacency(g)
    pat = [tuple(e) for e in pattern_edges]
    perms = list(itertools.permutations(range(k)))
    for lab in _labelings(g.n, k):
        if any(lab[v] < 0 for v in roots.values()):
            continue
        blocks = [[v for v in range(g.n) if lab[v] == b] for b in range(k)]
        if not all(_connected(adj, b) for b in blocks):
            continue
        quotient = set()
        for u, v in g.edges():
            a, b = lab[u], lab[v]
            if a >= 0 and b >= 0 and a != b:
                quotient.add((min(a, b), max(a, b)))
        for perm in perms:
            # block b plays pattern vertex perm[b]
            if any(perm[lab[v]] != p for p, v in roots.items()):
                continue
            if any(not any(lab[w] >= 0 and perm[lab[w]] == p for w in s) for p, s in must.items()):
                continue
            inv = {perm[b]: b for b in range(k)}
            if all((min(inv[p], inv[q]), max(inv[p], inv[q])) in quotient for p, q in pat):
                return True
    return False
