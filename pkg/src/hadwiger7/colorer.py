"""Certifying 7-colorer: a proper coloring with at most 7 colors, or a K7- minor.

The pipeline applies the first applicable step to the current graph:

1. ``SmallGraph``: at most 7 vertices, colored optimally.
2. ``DeleteLowDegree``: a vertex of degree <= 6 is removed and later gets the
   least color its neighbours do not use (a Kempe interchange is tried
   before a new color is opened).
3. ``IdentifyPair``: a degree-7 vertex with two non-adjacent neighbours
   ``x, y``; recurse on ``G - v`` with ``x, y`` identified.
4. ``K8Witness``: a degree-7 vertex with a complete neighbourhood spans K8.
5. ``IdentifyTriple``: a degree-8 vertex with a stable triple among its
   neighbours; identify the triple in ``G - v``.
6. ``Jakobsen``: at least ``9n/2 - 12`` edges; the graph is a cockade
   (colored piecewise, at most 6 colors) or has a K7- minor.
7. ``CliqueSumSplit``: a clique separator of order <= 6; both sides are
   solved and the colorings are glued by permuting colors on the clique.
8. ``ExactFallback``: exact 7-coloring search, then minor search.

In steps 3 and 5 the identified graph is a minor of the current one (the
merged vertex stands for the connected set ``{x, v, y}`` or
``{x, v, y, z}``), so a minor found there lifts back unchanged in shape.
The final certificate is checked against the input graph before return.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Union

from .coloring import chromatic_coloring, exact_k_color, is_proper
from .connectivity import disjoint_paths
from .errors import BudgetExceeded, Hadwiger7Error, TheoremViolation
from .graph import Graph, bits, delete_vertices, identify_with_map, induced_subgraph, pattern, to_mask
from .minors import DEFAULT_BUDGET, MinorModel, RootSpec, find_minor, find_rooted_minor, verify_model
from .structure.cockade import Cockade, CockadeLeaf, CockadeNode, jakobsen_classify, meets_jakobsen_threshold
from .structure.census import k5_pattern_report
from .structure.dichotomy import CirculantFound, neighborhood_dichotomy
from .structure.stable import has_stable_set

K7_MINUS = pattern("K7-")
MAX_COLORS = 7


@dataclass(frozen=True)
class ProperColoring:
    colors: tuple[int, ...]

    @property
    def count(self) -> int:
        return max(self.colors) + 1 if self.colors else 0

    def to_json(self) -> dict:
        return {"type": "coloring", "colors": {str(v): c for v, c in enumerate(self.colors)}}


@dataclass(frozen=True)
class MinorWitness:
    model: MinorModel

    def to_json(self) -> dict:
        return {"type": "minor", "model": self.model.to_json()}


Certificate = Union[ProperColoring, MinorWitness]


def certificate_from_json(data: dict) -> Certificate:
    if data.get("type") == "coloring":
        colors = data["colors"]
        return ProperColoring(tuple(colors[str(v)] for v in range(len(colors))))
    if data.get("type") == "minor":
        return MinorWitness(MinorModel.from_json(data["model"]))
    raise Hadwiger7Error(f"unknown certificate type {data.get('type')!r}")


@dataclass
class Step:
    """One reduction, recorded on the graph current at that moment."""

    kind: str
    n: int
    vertex: int | None = None
    merged: tuple[int, ...] = ()
    separator: tuple[int, ...] = ()
    sides: list[list["Step"]] = field(default_factory=list)
    side_vertices: list[tuple[int, ...]] = field(default_factory=list)

    def to_json(self) -> dict:
        out: dict = {"step": self.kind, "n": self.n}
        if self.vertex is not None:
            out["vertex"] = self.vertex
        if self.merged:
            out["merged"] = list(self.merged)
        if self.separator or self.kind == "CliqueSumSplit":
            out["separator"] = list(self.separator)
            out["side_vertices"] = [list(s) for s in self.side_vertices]
            out["sides"] = [[s.to_json() for s in side] for side in self.sides]
        return out


ReductionTrace = list


def verify_certificate(g: Graph, cert: Certificate) -> bool:
    if isinstance(cert, ProperColoring):
        colors = cert.colors
        return is_proper(g, colors) and all(0 <= c < MAX_COLORS for c in colors)
    if isinstance(cert, MinorWitness):
        pat = cert.model.pattern_graph
        degs = sorted(pat.degrees())
        if pat.n != 7 or pat.edge_count != 20 or degs != [5, 5, 6, 6, 6, 6, 6]:
            return False
        return verify_model(g, cert.model)
    return False


# -- step selection ------------------------------------------------------------


def reduction_step(g: Graph) -> Step:
    """The first applicable step for ``g``, without carrying it out."""
    return _select(g)[0]


def _select(g: Graph):
    n = g.n
    if n <= 7:
        return Step("SmallGraph", n), None
    degs = g.degrees()
    low = min(range(n), key=lambda v: (degs[v], v))
    if degs[low] <= 6:
        return Step("DeleteLowDegree", n, vertex=low), None
    deg7 = [v for v in range(n) if degs[v] == 7]
    for v in deg7:
        nbh, back = induced_subgraph(g, g.neighbors(v))
        pair = has_stable_set(nbh, 2)
        if pair is not None:
            return Step("IdentifyPair", n, vertex=v, merged=tuple(back[i] for i in pair)), None
    if deg7:
        return Step("K8Witness", n, vertex=deg7[0]), None
    for v in range(n):
        if degs[v] == 8:
            nbh, back = induced_subgraph(g, g.neighbors(v))
            triple = has_stable_set(nbh, 3)
            if triple is not None:
                return Step("IdentifyTriple", n, vertex=v, merged=tuple(back[i] for i in triple)), None
    if meets_jakobsen_threshold(g):
        return Step("Jakobsen", n), None
    split = _clique_separator(g, 6)
    if split is not None:
        clique, sides = split
        return Step("CliqueSumSplit", n, separator=clique, side_vertices=sides), None
    return Step("ExactFallback", n), None


def _clique_separator(g: Graph, max_order: int):
    from .minors import clique_separator

    found = clique_separator(g, max_order)
    if found is None:
        return None
    clique, comps = found
    cmask = to_mask(clique)
    first = comps[0]
    rest = g.vertex_mask & ~cmask & ~first
    a = tuple(sorted(bits(first | cmask)))
    b = tuple(sorted(bits(rest | cmask)))
    sides = sorted([a, b], key=lambda s: (len(s), s))
    return tuple(clique), sides


# -- lifting helpers -----------------------------------------------------------


def _least_free(g: Graph, v: int, colors: list[int]) -> int:
    """Least color missing from ``v``'s colored neighbours.

    When that would open a new color, first try a Kempe interchange: swap
    colors ``a``/``b`` on the two-colored component holding every
    ``a``-neighbour of ``v``, provided it holds no ``b``-neighbour. The
    coloring stays proper and ``a`` becomes free at ``v``.
    """
    nbrs = [w for w in bits(g.masks[v]) if colors[w] >= 0]
    taken = {colors[w] for w in nbrs}
    c = 0
    while c in taken:
        c += 1
    used = max(colors) + 1
    if c < used:
        return c
    for a in range(used):
        for b in range(used):
            if a == b:
                continue
            chain = {w for w in nbrs if colors[w] == a}
            stack = list(chain)
            while stack:
                x = stack.pop()
                for y in bits(g.masks[x]):
                    if y not in chain and colors[y] in (a, b):
                        chain.add(y)
                        stack.append(y)
            if any(colors[w] == b for w in nbrs if w in chain):
                continue
            for x in chain:
                colors[x] = b if colors[x] == a else a
            return a
    return c


def _lift_delete(g: Graph, v: int, back: list[int]) -> Callable[[Certificate], Certificate]:
    def lift(cert: Certificate) -> Certificate:
        if isinstance(cert, MinorWitness):
            sets = {p: frozenset(back[w] for w in s) for p, s in cert.model.branch_sets.items()}
            return MinorWitness(MinorModel(cert.model.pattern, sets))
        colors = [-1] * g.n
        for i, c in enumerate(cert.colors):
            colors[back[i]] = c
        colors[v] = _least_free(g, v, colors)
        return ProperColoring(tuple(colors))

    return lift


def _identify_after_delete(g: Graph, v: int, group: tuple[int, ...]):
    """``G - v`` with ``group`` identified, plus the lift back to ``g``."""
    sub, back = delete_vertices(g, [v])
    pos = {old: i for i, old in enumerate(back)}
    merged_graph, old_to_new = identify_with_map(sub, [pos[x] for x in group])
    merged_index = old_to_new[pos[group[0]]]
    to_new = {w: old_to_new[pos[w]] for w in range(g.n) if w != v}

    def lift(cert: Certificate) -> Certificate:
        if isinstance(cert, MinorWitness):
            sets = {}
            for p, s in cert.model.branch_sets.items():
                pre = {w for w, t in to_new.items() if t in s}
                if merged_index in s:
                    pre.add(v)
                sets[p] = frozenset(pre)
            return MinorWitness(MinorModel(cert.model.pattern, sets))
        colors = [-1] * g.n
        for w, t in to_new.items():
            colors[w] = cert.colors[t]
        colors[v] = _least_free(g, v, colors)
        return ProperColoring(tuple(colors))

    return merged_graph, lift


def _glue_colorings(n: int, sides: list[tuple[int, ...]], colorings: list[tuple[int, ...]], clique: tuple[int, ...], palette: int) -> list[int]:
    colors = [-1] * n
    first_side, first_colors = sides[0], colorings[0]
    for i, w in enumerate(first_side):
        colors[w] = first_colors[i]
    on_clique = {colors[s] for s in clique}
    for side, sc in zip(sides[1:], colorings[1:]):
        local = {w: sc[i] for i, w in enumerate(side)}
        perm = {local[s]: colors[s] for s in clique}
        spare = iter(c for c in range(palette) if c not in on_clique)
        for c in sorted(set(local.values())):
            if c not in perm:
                perm[c] = next(spare)
        for w in side:
            if colors[w] < 0:
                colors[w] = perm[local[w]]
    return colors


# -- cockade coloring ----------------------------------------------------------


def color_cockade(g: Graph, node: CockadeNode) -> list[int]:
    """Proper coloring with at most 6 colors, glued piece by piece."""
    colors = _color_node(g, node)
    return [colors[v] for v in range(g.n)]


def _color_node(g: Graph, node: CockadeNode) -> dict[int, int]:
    if isinstance(node, CockadeLeaf):
        vs = sorted(node.vertices)
        if node.tag == "K6":
            return {v: i for i, v in enumerate(vs)}
        sub, back = induced_subgraph(g, vs)
        local = exact_k_color(sub, 4)
        return {back[i]: c for i, c in enumerate(local)}
    clique = sorted(node.clique)
    colors = _color_node(g, node.parts[0])
    on_clique = {colors[s] for s in clique}
    for part in node.parts[1:]:
        local = _color_node(g, part)
        perm = {local[s]: colors[s] for s in clique}
        spare = iter(c for c in range(6) if c not in on_clique)
        for c in sorted(set(local.values())):
            if c not in perm:
                perm[c] = next(spare)
        for w, c in local.items():
            colors.setdefault(w, perm[c])
    return colors


# -- the pipeline ----------------------------------------------------------------


def color7(g: Graph, budget: int | None = DEFAULT_BUDGET) -> tuple[Certificate, ReductionTrace]:
    """Return ``(certificate, trace)`` for any input graph.

    Raises :class:`BudgetExceeded` (carrying the partial trace) only when the
    exact coloring search fails on a graph larger than ``budget`` vertices,
    so that a generic minor search would be needed.
    """
    trace: ReductionTrace = []
    try:
        cert = _solve(g, trace, budget)
    except BudgetExceeded as exc:
        raise BudgetExceeded(str(exc), trace=trace) from None
    if not verify_certificate(g, cert):
        raise Hadwiger7Error("internal error: certificate failed verification")
    return cert, trace


def _solve(g: Graph, trace: list, budget: int | None) -> Certificate:
    lifts: list[Callable[[Certificate], Certificate]] = []
    while True:
        step, _ = _select(g)
        trace.append(step)
        kind = step.kind
        if kind == "DeleteLowDegree":
            sub, back = delete_vertices(g, [step.vertex])
            lifts.append(_lift_delete(g, step.vertex, back))
            g = sub
            continue
        if kind in ("IdentifyPair", "IdentifyTriple"):
            g, lift = _identify_after_delete(g, step.vertex, step.merged)
            lifts.append(lift)
            continue
        cert = _terminal(g, step, budget)
        break
    for lift in reversed(lifts):
        cert = lift(cert)
    return cert


def _terminal(g: Graph, step: Step, budget: int | None) -> Certificate:
    kind = step.kind
    if kind == "SmallGraph":
        return ProperColoring(tuple(chromatic_coloring(g)))
    if kind == "K8Witness":
        clique = [step.vertex] + g.neighbors(step.vertex)
        return MinorWitness(MinorModel(K7_MINUS, {p: frozenset([clique[p]]) for p in range(7)}))
    if kind == "Jakobsen":
        result = jakobsen_classify(g, budget=budget)
        if isinstance(result, Cockade):
            step.kind = "CockadeColor"
            return ProperColoring(tuple(color_cockade(g, result.decomposition)))
        step.kind = "JakobsenMinor"
        return MinorWitness(result.model)
    if kind == "CliqueSumSplit":
        certs = []
        colorings = []
        for side in step.side_vertices:
            sub, back = induced_subgraph(g, side)
            side_trace: list = []
            step.sides.append(side_trace)
            cert = _solve(sub, side_trace, budget)
            if isinstance(cert, MinorWitness):
                sets = {p: frozenset(back[w] for w in s) for p, s in cert.model.branch_sets.items()}
                return MinorWitness(MinorModel(cert.model.pattern, sets))
            certs.append(cert)
            colorings.append(cert.colors)
        colors = _glue_colorings(g.n, step.side_vertices, colorings, step.separator, MAX_COLORS)
        return ProperColoring(tuple(colors))
    return _exact_fallback(g, budget)


def _exact_fallback(g: Graph, budget: int | None) -> Certificate:
    colors = exact_k_color(g, MAX_COLORS)
    if colors is not None:
        return ProperColoring(tuple(colors))
    if budget is not None and g.n > budget:
        raise BudgetExceeded(f"minor search on {g.n} vertices exceeds the budget of {budget}")
    model = minor_fast_paths(g, budget)
    if model is None:
        model = find_minor(K7_MINUS, g, budget=budget)
    if model is None:
        raise TheoremViolation("graph is neither 7-colorable nor has a K7- minor")
    return MinorWitness(model)


def minor_fast_paths(g: Graph, budget: int | None = DEFAULT_BUDGET) -> MinorModel | None:
    """Configuration-driven K7- minor constructions; every result is verified.

    * a K6- subgraph plus a vertex outside it with a 6-fan into it;
    * two adjacent degree-8 vertices whose neighbourhoods contain C8(1,2)
      (rooted search with both as singleton branch sets);
    * three K5 covering at least 12 vertices (generic search).
    """
    report = k5_pattern_report(g)
    k6m = report["k6_minus"]
    if k6m is not None:
        model = _k6_minus_fan(g, k6m)
        if model is not None:
            return model
    degs = g.degrees()
    circ = [u for u in range(g.n) if degs[u] == 8 and isinstance(neighborhood_dichotomy(g, u), CirculantFound)]
    for i, u in enumerate(circ):
        for w in circ[i + 1:]:
            if g.has_edge(u, w):
                model = find_rooted_minor(K7_MINUS, g, RootSpec(roots={2: u, 3: w}), budget=budget)
                if model is not None:
                    return model
    if report["triple"] is not None:
        return find_minor(K7_MINUS, g, budget=budget)
    return None


def _k6_minus_fan(g: Graph, six: list[int]) -> MinorModel | None:
    missing = [(a, b) for i, a in enumerate(six) for b in six[i + 1:] if not g.has_edge(a, b)]
    if len(missing) > 1:
        return None
    if missing:
        a, b = missing[0]
        order = [a, b] + [v for v in six if v not in (a, b)]
    else:
        order = list(six)
    inside = set(six)
    for x in range(g.n):
        if x in inside:
            continue
        fan = disjoint_paths(g, [x], six, 6)
        if not fan:
            continue
        hub = {x}
        for path in fan.paths:
            hub.update(path[:-1])
        sets = {p: frozenset([order[p]]) for p in range(6)}
        sets[6] = frozenset(hub)
        model = MinorModel(K7_MINUS, sets)
        if verify_model(g, model):
            return model
    return None
