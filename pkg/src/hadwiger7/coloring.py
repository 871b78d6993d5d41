"""Exact k-coloring by DSATUR-ordered backtracking."""

from __future__ import annotations

from .graph import Graph, bits


def is_proper(g: Graph, colors) -> bool:
    """Independent edge scan: every vertex colored, no monochromatic edge."""
    if len(colors) != g.n or any(c is None or c < 0 for c in colors):
        return False
    return all(colors[u] != colors[v] for u, v in g.edges())


def normalize(colors) -> list[int]:
    """Renumber colors by first appearance so that ``0..count-1`` are all used."""
    seen: dict[int, int] = {}
    return [seen.setdefault(c, len(seen)) for c in colors]


def greedy_clique(g: Graph, within: int | None = None) -> list[int]:
    cand = g.vertex_mask if within is None else within
    clique = []
    while cand:
        v = max(bits(cand), key=lambda u: ((g.masks[u] & cand).bit_count(), -u))
        clique.append(v)
        cand &= g.masks[v]
    return clique


def exact_k_color(g: Graph, k: int) -> list[int] | None:
    """Proper coloring with at most ``k`` colors, or None when none exists.

    Components are colored independently. Each component seeds a greedy
    clique with distinct colors, then DSATUR picks the vertex with the most
    distinct neighbour colors (ties: larger uncolored degree, smaller index).
    A fresh color is tried only once per branch, which removes the symmetry
    between unused colors.
    """
    if g.n == 0:
        return []
    if k <= 0:
        return None
    colors = [-1] * g.n
    for comp in g.components():
        if not _color_component(g, comp, k, colors):
            return None
    return colors


def _color_component(g: Graph, comp: int, k: int, colors: list[int]) -> bool:
    masks = g.masks
    clique = greedy_clique(g, comp)
    if len(clique) > k:
        return False
    # nbr_colors[v]: bitmask of colors present on v's neighbours
    nbr_colors = [0] * g.n
    for c, v in enumerate(clique):
        colors[v] = c
        for w in bits(masks[v]):
            nbr_colors[w] |= 1 << c
    uncolored = comp & ~sum(1 << v for v in clique)
    used = len(clique)
    full = (1 << k) - 1

    def solve(uncolored: int, used: int) -> bool:
        if not uncolored:
            return True
        best = -1
        best_key = None
        for v in bits(uncolored):
            sat = nbr_colors[v].bit_count()
            if sat >= k and nbr_colors[v] & full == full:
                return False
            key = (sat, (masks[v] & uncolored).bit_count(), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        v = best
        rest = uncolored & ~(1 << v)
        nbrs = list(bits(masks[v] & rest))
        for c in range(min(used + 1, k)):
            if nbr_colors[v] >> c & 1:
                continue
            colors[v] = c
            saved = [nbr_colors[w] for w in nbrs]
            bit = 1 << c
            for w in nbrs:
                nbr_colors[w] |= bit
            if solve(rest, max(used, c + 1)):
                return True
            for w, old in zip(nbrs, saved):
                nbr_colors[w] = old
        colors[v] = -1
        return False

    return solve(uncolored, used)


def chromatic_coloring(g: Graph, upper: int | None = None) -> list[int]:
    """A coloring with the minimum number of colors (exhaustive; small graphs only)."""
    top = g.n if upper is None else upper
    lower = max(1, len(greedy_clique(g))) if g.n else 0
    for k in range(lower, top + 1):
        found = exact_k_color(g, k)
        if found is not None:
            return normalize(found)
    raise ValueError("no coloring within the given upper bound")
