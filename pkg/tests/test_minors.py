import itertools
import json
import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from conftest import graphs
from oracles import minor_bruteforce, rooted_minor_bruteforce
from hadwiger7.catalog import atlas
from hadwiger7.connectivity import is_k_connected
from hadwiger7.errors import BudgetExceeded, GraphInputError
from hadwiger7.graph import (
    complete,
    delete_vertices,
    from_edge_list,
    from_networkx,
    icosahedron,
    pattern,
    petersen,
    wheel_over,
)
from hadwiger7.minors import (
    MinorModel,
    RootSpec,
    apex_number,
    clique_separator,
    find_minor,
    find_rooted_minor,
    respects_roots,
    verify_model,
)
from hadwiger7.planarity import is_planar_fast
from hadwiger7.structure import generate_cockade

K5, K6M, K7M, K33, K4 = (pattern(t) for t in ("K5", "K6-", "K7-", "K33", "K4"))
C812 = pattern("C8_12").graph


def test_petersen_pairs_form_a_k5_model():
    model = MinorModel(K5, {i: frozenset({i, i + 5}) for i in range(5)})
    assert verify_model(petersen(), model)


def test_singletons_in_k7():
    model = MinorModel(K7M, {i: frozenset({i}) for i in range(7)})
    assert verify_model(complete(7), model)
    found = find_minor(K7M, complete(7))
    assert {found.branch_sets[p] for p in range(7)} == {frozenset({v}) for v in range(7)}


def test_invalid_models_rejected():
    host = complete(6)
    overlap = {0: {0, 1}, 1: {1}, 2: {2}, 3: {3}, 4: {4}}
    assert not verify_model(host, MinorModel(K5, {p: frozenset(s) for p, s in overlap.items()}))
    disconnected = {i: frozenset({i}) for i in range(5)}
    disconnected[0] = frozenset({0, 5})
    assert not verify_model(from_edge_list(6, [e for e in complete(5).edges()]), MinorModel(K5, disconnected))
    missing = {i: frozenset({i}) for i in range(4)}
    assert not verify_model(host, MinorModel(K5, missing))
    assert not verify_model(host, MinorModel(K5, {i: frozenset({i + 10}) for i in range(5)}))


def test_spec_searches():
    g, _ = generate_cockade(["K6", "K6"])
    assert find_minor(K7M, g) is None
    model = find_minor(K5, petersen())
    assert model is not None and verify_model(petersen(), model)


def test_model_json_round_trip():
    model = find_minor(K5, petersen())
    text = json.dumps(model.to_json(), sort_keys=True)
    back = MinorModel.from_json(text)
    assert back.branch_sets == model.branch_sets
    assert verify_model(petersen(), back)
    data = json.loads(text)
    assert set(data) == {"pattern", "branch_sets"} and data["pattern"]["tag"] == "K5"


def test_rooted_examples():
    roots = RootSpec(roots={0: 5, 1: 2, 2: 0, 3: 3})
    model = find_rooted_minor(K4, complete(6), roots)
    assert all(model.branch_sets[p] == frozenset({v}) for p, v in roots.roots.items())
    assert find_rooted_minor(K5, C812, RootSpec(roots={0: 0, 1: 1, 2: 2})) is None


def test_pendant_root_pulls_in_its_neighbour():
    host = from_edge_list(6, list(complete(5).edges()) + [(5, 3)])
    model = find_rooted_minor(K5, host, RootSpec(roots={0: 5}))
    assert model.branch_sets[0] == frozenset({5, 3})
    assert sorted(len(s) for s in model.branch_sets.values()) == [1, 1, 1, 1, 2]


def test_rooted_input_errors():
    with pytest.raises(GraphInputError):
        find_rooted_minor(K4, complete(6), RootSpec(roots={0: 1, 1: 1}))
    with pytest.raises(GraphInputError):
        find_rooted_minor(K4, complete(6), RootSpec(roots={0: 9}))
    with pytest.raises(GraphInputError):
        find_rooted_minor(K4, complete(6), RootSpec(roots={7: 0}))


def test_must_intersect():
    host = from_edge_list(6, list(complete(5).edges()) + [(5, 3)])
    spec = RootSpec(must_intersect={2: frozenset({5})})
    model = find_rooted_minor(K5, host, spec)
    assert respects_roots(model, spec) and 5 in model.branch_sets[2]


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        find_minor(K5, complete(70))
    assert find_minor(K5, complete(70), budget=None) is not None
    with pytest.raises(BudgetExceeded):
        find_rooted_minor(K5, complete(10), RootSpec(), budget=8)


def test_apex_icosahedron_has_no_k6():
    g = wheel_over(icosahedron())
    assert apex_number(g) == 1
    assert find_minor(pattern("K6"), g) is None
    assert find_minor(K5, g) is not None


def test_clique_separator_found_in_cockade():
    g, _ = generate_cockade(["K6", "K6"])
    clique, comps = clique_separator(g, 4)
    assert len(clique) == 4 and len(comps) == 2


@pytest.mark.parametrize("pat, k", [(K5, 5), (K6M, 6), (K33, 6)])
def test_agrees_with_bruteforce_up_to_six_vertices(pat, k):
    for g in atlas():
        if g.n <= 6:
            assert (find_minor(pat, g) is not None) == minor_bruteforce(pat.graph.edges(), k, g), g


@given(graphs(min_n=4, max_n=7), st.data())
def test_rooted_agrees_with_bruteforce(g, data):
    pat = data.draw(st.sampled_from([pattern("K3"), K4]))
    k = pat.n
    chosen = data.draw(st.lists(st.integers(0, g.n - 1), min_size=1, max_size=2, unique=True))
    roots = {p: v for p, v in enumerate(chosen)}
    must = {}
    if data.draw(st.booleans()):
        must = {k - 1: frozenset(data.draw(st.lists(st.integers(0, g.n - 1), min_size=1, max_size=3, unique=True)))}
    spec = RootSpec(roots=roots, must_intersect=must)
    model = find_rooted_minor(pat, g, spec)
    assert (model is not None) == rooted_minor_bruteforce(pat.graph.edges(), k, g, roots, must)
    if model is not None:
        assert verify_model(g, model) and respects_roots(model, spec)


@given(graphs(min_n=5, max_n=9), st.data())
def test_monotone_under_deletion(g, data):
    pat = data.draw(st.sampled_from([K5, K33, K6M]))
    model = find_minor(pat, g)
    if model is not None:
        assert verify_model(g, model)
        return
    drop = data.draw(st.lists(st.integers(0, g.n - 1), max_size=2, unique=True))
    sub, _ = delete_vertices(g, drop)
    edges = sub.edges()
    if edges:
        keep = [e for e in edges if data.draw(st.booleans())]
        sub = from_edge_list(sub.n, keep)
    assert find_minor(pat, sub) is None


def _four_connected_nonplanar(rng, n):
    while True:
        h = nx.gnm_random_graph(n, rng.randint(2 * n, 4 * n), seed=rng.randrange(2**32))
        g = from_networkx(h)
        if is_k_connected(g, 4) and not is_planar_fast(g):
            return g


def test_wagner_on_four_connected_hosts():
    rng = random.Random(11)
    for _ in range(40):
        g = _four_connected_nonplanar(rng, rng.randint(7, 12))
        model = find_minor(K5, g)
        assert model is not None and verify_model(g, model)


def test_dense_random_hosts_return_verified_k7_minus():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(9, 14)
        g = from_networkx(nx.gnm_random_graph(n, rng.randint(3 * n, 5 * n), seed=rng.randrange(2**32)))
        model = find_minor(K7M, g)
        if model is not None:
            assert verify_model(g, model)


def test_deterministic_output():
    g = from_networkx(nx.gnm_random_graph(12, 40, seed=3))
    first = find_minor(K6M, g)
    second = find_minor(K6M, g)
    assert (first is None and second is None) or first.branch_sets == second.branch_sets


def test_spot_models_against_all_pairs():
    for g in (petersen(), icosahedron(), C812):
        for pat in (K5, K33, pattern("K4")):
            model = find_minor(pat, g)
            if model is not None:
                for p, q in itertools.combinations(range(pat.n), 2):
                    assert model.branch_sets[p].isdisjoint(model.branch_sets[q])
