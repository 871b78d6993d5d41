"""Exhaustive and randomized checks of the small structural facts.

Each suite returns a JSON-ready report. Reports hold no timings, so equal
seeds give identical output. Work is sharded over ``HADWIGER7_THREADS``
worker threads and merged in input order.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence

from .bruteforce import has_minor_bruteforce
from .catalog import atlas, triangle_free_graphs
from .connectivity import is_k_connected
from .errors import GraphInputError, Hadwiger7Error
from .formats import to_graph6
from .graph import Graph, complement, from_masks, pattern
from .minors import find_minor
from .planarity import is_planar_fast
from .structure.cockade import check_decomposition, recognize_cockade
from .structure.dichotomy import neighborhood_shape
from .structure.stable import contains_fixed_subgraph, find_triangle_in_alpha2, first_clique, has_stable_set

SUITES = ("ramsey33", "dichotomy8", "cockade-edges", "oracle-minors")
MAX_EXAMPLES = 5


def thread_count() -> int:
    raw = os.environ.get("HADWIGER7_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise GraphInputError(f"HADWIGER7_THREADS must be an integer, got {raw!r}") from None


def sharded_map(fn: Callable, items: Sequence, threads: int | None = None) -> list:
    """``[fn(x) for x in items]`` spread over threads; output order is input order."""
    threads = threads or thread_count()
    if threads == 1 or len(items) < 2:
        return [fn(x) for x in items]
    size = -(-len(items) // threads)
    chunks = [items[i:i + size] for i in range(0, len(items), size)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(lambda chunk: [fn(x) for x in chunk], chunks))
    return [r for part in parts for r in part]


def _report(suite: str, unit: str, failures: Iterable[str | None], **extra) -> dict:
    failures = list(failures)
    bad = [f for f in failures if f is not None]
    out = {
        "suite": suite,
        "checked": len(failures),
        "counterexamples": len(bad),
        "examples": bad[:MAX_EXAMPLES],
        "summary": f"{len(bad)} counterexamples / {len(failures)} {unit}",
        "ok": not bad,
    }
    out.update(extra)
    return out


# -- suites ------------------------------------------------------------------


def _six_vertex_graph(code: int) -> Graph:
    masks = [0] * 6
    bit = 0
    for i in range(6):
        for j in range(i + 1, 6):
            if code >> bit & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            bit += 1
    return from_masks(masks)


def _ramsey_case(code: int | Graph) -> tuple[bool, str | None]:
    g = _six_vertex_graph(code) if isinstance(code, int) else code
    if g.n < 6 or has_stable_set(g, 3) is not None:
        return False, None
    try:
        tri = find_triangle_in_alpha2(g)
    except (AssertionError, Hadwiger7Error):
        return True, to_graph6(g)
    return True, None if g.is_clique(tri) and len(set(tri)) == 3 else to_graph6(g)


def ramsey33(graphs: Sequence[Graph] | None = None) -> dict:
    """Every labeled 6-vertex graph without a stable triple has a triangle.

    ``graphs`` replaces the labeled enumeration with given inputs.
    """
    items = list(graphs) if graphs is not None else list(range(1 << 15))
    results = sharded_map(_ramsey_case, items)
    return _report("ramsey33", "graphs", (r[1] for r in results), alpha_at_most_2=sum(r[0] for r in results))


def _dichotomy_case(h: Graph) -> str | None:
    if contains_fixed_subgraph(pattern("C8_12"), h) is None:
        return to_graph6(h)
    for v in range(h.n):
        if h.degree(v) not in (4, 5) or neighborhood_shape(h, v) is None:
            return to_graph6(h)
    return None


def dichotomy8(graphs: Sequence[Graph] | None = None) -> dict:
    """8-vertex graphs with alpha <= 2 that are K4-free, 4-connected and planar.

    Each must contain C8(1,2), and every vertex has degree 4 or 5 with a
    neighbourhood inducing a 4-path, 4-cycle or 5-cycle. ``graphs``
    replaces the enumeration; inputs that are not 8-vertex graphs with
    alpha <= 2 are dropped by the filter.
    """
    if graphs is None:
        pool = [complement(g) for g in triangle_free_graphs(8)]
    else:
        pool = [h for h in graphs if h.n == 8 and has_stable_set(h, 3) is None]
    survivors = [h for h in pool if first_clique(h, 4) is None and is_k_connected(h, 4) and is_planar_fast(h)]
    shapes: dict[str, int] = {}
    for h in survivors:
        for v in range(h.n):
            s = neighborhood_shape(h, v) or "other"
            shapes[s] = shapes.get(s, 0) + 1
    return _report(
        "dichotomy8",
        "survivors",
        sharded_map(_dichotomy_case, survivors),
        alpha_at_most_2=len(pool),
        survivor_graph6=sorted(to_graph6(h) for h in survivors),
        neighborhood_shapes=dict(sorted(shapes.items())),
    )


def cockade_edges(count: int = 200, max_n: int = 40, seed: int = 0, minor_check_upto: int = 20) -> dict:
    """Generated cockades have ``9n/2 - 12`` edges, round-trip, and (small ones) no K7- minor."""
    from .generators import cockade_suite

    suite = cockade_suite(count, max_n, seed)
    k7m = pattern("K7-")

    def case(item) -> str | None:
        g, decomp = item
        if 2 * g.edge_count != 9 * g.n - 24 or not check_decomposition(g, decomp):
            return to_graph6(g)
        found = recognize_cockade(g)
        if found is None or not check_decomposition(g, found):
            return to_graph6(g)
        if g.n <= minor_check_upto and find_minor(k7m, g, budget=None) is not None:
            return to_graph6(g)
        return None

    sizes = sorted(g.n for g, _ in suite)
    return _report(
        "cockade-edges",
        "cockades",
        sharded_map(case, suite),
        seed=seed,
        max_vertices=sizes[-1] if sizes else 0,
        minor_checked=sum(1 for n in sizes if n <= minor_check_upto),
    )


ORACLE_PATTERNS = ("K5", "K6-", "K33")


def oracle_minors(graphs: Sequence[Graph] | None = None, max_n: int = 7) -> dict:
    """find_minor agrees with partition enumeration on the small-graph atlas (or on ``graphs``)."""
    if graphs is None:
        graphs = [g for g in atlas() if g.n <= max_n]
    elif any(g.n > 9 for g in graphs):
        raise GraphInputError("oracle-minors compares against brute force; inputs must have at most 9 vertices")
    graphs = list(graphs)
    pats = [pattern(t) for t in ORACLE_PATTERNS]

    def case(g: Graph) -> str | None:
        for p in pats:
            fast = find_minor(p, g) is not None
            if fast != has_minor_bruteforce(p, g):
                return f"{p.tag}:{to_graph6(g)}"
        return None

    failures = sharded_map(case, graphs)
    return _report("oracle-minors", "graphs", failures, patterns=list(ORACLE_PATTERNS), comparisons=len(graphs) * len(pats))


def run_suite(name: str, graphs: Sequence[Graph] | None = None) -> dict:
    runners = {"ramsey33": ramsey33, "dichotomy8": dichotomy8, "cockade-edges": cockade_edges, "oracle-minors": oracle_minors}
    if name not in runners:
        raise GraphInputError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if graphs is None:
        return runners[name]()
    if name == "cockade-edges":
        raise GraphInputError("cockade-edges generates its own corpus and takes no input")
    return runners[name](graphs)
