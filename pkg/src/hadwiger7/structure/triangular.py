"""The three-case "triangular with respect to T" predicate.

A circuit is a cycle and valency is degree inside ``h``. Each case is
evaluated literally, enumerating circuits where the wording talks about
circuits.
"""

from __future__ import annotations

from typing import Sequence

from ..errors import PreconditionError
from ..graph import Graph, bits, to_mask


def circuits(g: Graph, within: int | None = None) -> set[frozenset[int]]:
    """Vertex sets of all cycles of the subgraph induced by ``within``."""
    if within is None:
        within = g.vertex_mask
    found: set[frozenset[int]] = set()
    for s in bits(within):
        allowed = within & ~((1 << (s + 1)) - 1)
        stack = [(s, 1 << s, [s])]
        while stack:
            v, used, walk = stack.pop()
            for w in bits(g.masks[v] & within):
                if w == s and len(walk) >= 3:
                    found.add(frozenset(walk))
                elif allowed >> w & 1 and not used >> w & 1:
                    stack.append((w, used | 1 << w, walk + [w]))
    return found


def _degrees_in(g: Graph, within: int) -> dict[int, int]:
    return {v: (g.masks[v] & within).bit_count() for v in bits(within)}


def _case_one(h: Graph, tri: Sequence[int]) -> bool:
    for vi in tri:
        rest = h.vertex_mask & ~(1 << vi)
        deg = _degrees_in(h, rest)
        if deg and max(deg.values()) > 2:
            continue
        cyc = circuits(h, rest)
        if not cyc:
            return True
        is_one_circuit = len(cyc) == 1 and next(iter(cyc)) == frozenset(bits(rest))
        if is_one_circuit:
            return True
    return False


def _case_two(h: Graph, tri: Sequence[int]) -> bool:
    deg = h.degrees()
    if max(deg, default=0) > 3:
        return False
    outside = [v for v in range(h.n) if v not in tri and deg[v] == 3]
    if len(outside) > 1:
        return False
    return not circuits(h, h.vertex_mask & ~to_mask(tri))


def _case_three(h: Graph, tri: Sequence[int]) -> bool:
    deg = h.degrees()
    if max(deg, default=0) > 3:
        return False
    tset = frozenset(tri)
    every = circuits(h)
    for c in every:
        if len(c) != 3 or c & tset:
            continue
        allowed = tset | c
        if any(deg[v] == 3 and v not in allowed for v in range(h.n)):
            continue
        if all(z in (tset, c) or (z & tset and z & c) for z in every):
            return True
    return False


def is_triangular_wrt(h: Graph, tri: Sequence[int]) -> bool:
    """Whether ``h`` is triangular with respect to the triangle ``tri``."""
    tri = tuple(tri)
    if len(set(tri)) != 3 or any(not 0 <= v < h.n for v in tri) or not h.is_clique(tri):
        raise PreconditionError(f"{tri} is not a triangle of h")
    return _case_one(h, tri) or _case_two(h, tri) or _case_three(h, tri)
