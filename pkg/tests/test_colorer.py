import json
import random

import networkx as nx
import pytest

from oracles import chromatic_number
from hadwiger7.catalog import atlas
from hadwiger7.colorer import (
    MinorWitness,
    ProperColoring,
    certificate_from_json,
    color7,
    color_cockade,
    minor_fast_paths,
    reduction_step,
    verify_certificate,
)
from hadwiger7.coloring import exact_k_color
from hadwiger7.errors import BudgetExceeded
from hadwiger7.generators import cockade_suite, random_gnm
from hadwiger7.graph import (
    circulant,
    complete,
    cycle,
    delete_vertices,
    from_edge_list,
    from_networkx,
    icosahedron,
    identify_with_map,
    induced_subgraph,
    pattern,
    petersen,
)
from hadwiger7.minors import MinorModel, find_minor, verify_model
from hadwiger7.structure import generate_cockade, recognize_cockade

K7M = pattern("K7-")
C812 = pattern("C8_12").graph


def _kinds(trace):
    return [s.kind for s in trace]


def test_k7_uses_seven_colors():
    cert, trace = color7(complete(7))
    assert isinstance(cert, ProperColoring) and cert.count == 7
    assert _kinds(trace) == ["SmallGraph"]


def test_k8_gives_minor():
    cert, trace = color7(complete(8))
    assert isinstance(cert, MinorWitness) and verify_model(complete(8), cert.model)
    assert _kinds(trace) == ["K8Witness"]


def test_two_k6_cockade_uses_six_colors():
    g, _ = generate_cockade(["K6", "K6"])
    cert, _ = color7(g)
    assert isinstance(cert, ProperColoring) and cert.count == 6


def test_icosahedron_four_colors_by_deletions():
    cert, trace = color7(icosahedron())
    assert isinstance(cert, ProperColoring) and cert.count <= 4
    assert set(_kinds(trace)) == {"DeleteLowDegree", "SmallGraph"}


def test_exact_k_color_examples():
    assert exact_k_color(cycle(5), 2) is None
    assert exact_k_color(cycle(5), 3) is not None
    assert exact_k_color(complete(7), 6) is None
    assert exact_k_color(C812, 4) is not None
    assert exact_k_color(C812, 3) is None


def test_exact_k_color_matches_chromatic_oracle():
    for g in atlas():
        if 1 <= g.n <= 6:
            chi = chromatic_number(g)
            assert exact_k_color(g, chi) is not None
            assert chi == 1 or exact_k_color(g, chi - 1) is None


def test_verify_certificate_examples():
    assert verify_certificate(complete(7), ProperColoring(tuple(range(7))))
    singles = MinorModel(K7M, {p: frozenset({p}) for p in range(7)})
    assert verify_certificate(complete(8), MinorWitness(singles))
    assert not verify_certificate(complete(7), ProperColoring((0, 1, 2, 3, 4, 5, 0)))
    assert not verify_certificate(complete(8), ProperColoring(tuple(range(8))))
    k5_model = MinorModel(pattern("K5"), {p: frozenset({p}) for p in range(5)})
    assert not verify_certificate(complete(8), MinorWitness(k5_model))


def test_reduction_step_examples():
    assert reduction_step(petersen()).kind == "DeleteLowDegree"
    seven_regular = circulant(14, [1, 2, 3, 7])
    assert set(seven_regular.degrees()) == {7}
    step = reduction_step(seven_regular)
    assert step.kind == "IdentifyPair"
    x, y = step.merged
    assert not seven_regular.has_edge(x, y) and {x, y} <= set(seven_regular.neighbors(step.vertex))
    assert reduction_step(complete(8)).kind == "K8Witness"


def test_identify_triple_step():
    eight_regular = circulant(20, [1, 3, 5, 7])
    step = reduction_step(eight_regular)
    assert step.kind == "IdentifyTriple"
    assert eight_regular.is_stable(step.merged)


def test_clique_split_and_exact_fallback():
    a, b = circulant(25, [1, 2, 3, 4]), circulant(27, [1, 2, 3, 4])
    edges = list(a.edges()) + [(_shift(x), _shift(y)) for x, y in b.edges()]
    g = from_edge_list(47, {(min(x, y), max(x, y)) for x, y in edges})
    cert, trace = color7(g)
    assert isinstance(cert, ProperColoring)
    top = trace[0]
    assert top.kind == "CliqueSumSplit" and top.separator == (0, 1, 2, 3, 4)
    assert [_kinds(side) for side in top.sides] == [["ExactFallback"], ["ExactFallback"]]
    assert len(top.side_vertices[0]) <= len(top.side_vertices[1])


def _shift(v):
    return v if v < 5 else v + 20


def test_budget_exceeded_carries_trace():
    with pytest.raises(BudgetExceeded) as info:
        color7(complete(9), budget=5)
    assert _kinds(info.value.trace) == ["Jakobsen"]


def test_k6_minus_fan_fast_path():
    edges = [e for e in complete(6).edges() if e != (0, 1)]
    edges += [(6, 2), (6, 3), (6, 4), (6, 7), (7, 0), (6, 8), (8, 1), (6, 9), (9, 5)]
    g = from_edge_list(10, edges)
    model = minor_fast_paths(g)
    assert model is not None and verify_model(g, model)
    assert model.branch_sets[6] == frozenset({6, 7, 8, 9})


def test_cockade_coloring_never_exceeds_six():
    for g, decomp in cockade_suite(30, max_n=30, seed=4):
        colors = color_cockade(g, decomp)
        assert all(colors[u] != colors[v] for u, v in g.edges())
        assert max(colors) <= 5
        found = recognize_cockade(g)
        assert max(color_cockade(g, found)) <= 5


def test_certificate_json_round_trip():
    for g in (complete(8), icosahedron()):
        cert, trace = color7(g)
        data = json.loads(json.dumps(cert.to_json(), sort_keys=True))
        assert verify_certificate(g, certificate_from_json(data))
        json.dumps([s.to_json() for s in trace])


def test_agreement_with_minor_oracle_on_atlas():
    for g in atlas():
        cert, _ = color7(g)
        assert verify_certificate(g, cert)
        if find_minor(K7M, g) is None:
            assert isinstance(cert, ProperColoring) and cert.count <= 7


def _replay(g, trace):
    """Walk the top-level trace; every identification is checked as a minor via an explicit model."""
    cur = g
    for step in trace:
        assert step.n == cur.n
        if step.kind == "DeleteLowDegree":
            assert cur.degree(step.vertex) <= 6
            cur, _ = delete_vertices(cur, [step.vertex])
        elif step.kind in ("IdentifyPair", "IdentifyTriple"):
            v = step.vertex
            assert cur.degree(v) == (7 if step.kind == "IdentifyPair" else 8)
            assert cur.is_stable(step.merged) and set(step.merged) <= set(cur.neighbors(v))
            sub, back = delete_vertices(cur, [v])
            pos = {old: i for i, old in enumerate(back)}
            nxt, old_to_new = identify_with_map(sub, [pos[x] for x in step.merged])
            merged = old_to_new[pos[step.merged[0]]]
            sets = {}
            for p in range(nxt.n):
                members = {back[i] for i in range(sub.n) if old_to_new[i] == p}
                if p == merged:
                    members.add(v)
                sets[p] = frozenset(members)
            assert verify_model(cur, MinorModel(nxt, sets))
            cur = nxt
        elif step.kind == "CliqueSumSplit":
            assert cur.is_clique(step.separator) and len(step.separator) <= 6
            for side, side_trace in zip(step.side_vertices, step.sides):
                _replay(induced_subgraph(cur, side)[0], side_trace)
            return
        else:
            return


def test_trace_replay_on_random_dense_graphs():
    rng = random.Random(8)
    seen = set()
    for _ in range(60):
        n = rng.randint(10, 16)
        d = rng.choice([7, 8, 9])
        if n * d % 2:
            continue
        g = from_networkx(nx.random_regular_graph(d, n, seed=rng.randrange(10**6)))
        cert, trace = color7(g)
        assert verify_certificate(g, cert)
        _replay(g, trace)
        seen.update(_kinds(trace))
    assert {"IdentifyPair", "IdentifyTriple", "DeleteLowDegree"} <= seen


def test_random_graphs_always_certified():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(8, 14)
        g = random_gnm(n, rng.randint(n, n * (n - 1) // 2), seed=rng.randrange(10**6))
        cert, _ = color7(g)
        assert verify_certificate(g, cert)
