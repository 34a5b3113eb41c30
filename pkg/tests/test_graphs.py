import random

import pytest

from chromabound import (
    Graph,
    GraphParseError,
    canonical_form,
    enumerate_connected_subsets,
    generate_graph,
    neighborhood_profile,
    parse_graph,
)


def test_graph_basic_accessors():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 1)])
    assert g.n == 4
    assert g.m == 3
    assert g.has_edge(0, 1) and g.has_edge(1, 0)
    assert not g.has_edge(0, 2)
    assert g.degrees() == (1, 2, 2, 1)
    assert g.max_degree == 2
    assert g.neighbors(1) == frozenset({0, 2})


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(-1, [])


def test_graph_is_immutable():
    g = Graph(2, [(0, 1)])
    with pytest.raises(AttributeError):
        g.n = 5


def test_components_and_connectivity():
    g = Graph(5, [(0, 1), (2, 3)])
    assert not g.is_connected()
    comps = g.components()
    assert sorted(map(sorted, comps)) == [[0, 1], [2, 3], [4]]
    assert Graph(1, []).is_connected()
    assert Graph(0, []).is_connected()


def test_induced_subgraph():
    g = generate_graph("cycle", n=5)
    h = g.induced([0, 1, 2])
    assert h.n == 3 and h.m == 2
    assert h.has_edge(0, 1) and h.has_edge(1, 2)


def test_relabeled_preserves_structure():
    rng = random.Random(11)
    g = generate_graph("grid", rows=2, cols=3)
    for _ in range(20):
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = g.relabeled(perm)
        assert h.m == g.m
        assert sorted(h.degrees()) == sorted(g.degrees())
        for u, v in [(0, 1), (0, 3), (2, 5)]:
            assert h.has_edge(perm[u], perm[v]) == g.has_edge(u, v)


def test_canonical_form_is_isomorphism_invariant():
    rng = random.Random(7)
    for name, kwargs in [
        ("cycle", {"n": 6}),
        ("path", {"n": 7}),
        ("grid", {"rows": 2, "cols": 3}),
        ("petersen", {}),
        ("complete", {"n": 5}),
    ]:
        g = generate_graph(name, **kwargs)
        base = canonical_form(g)
        for _ in range(10):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_form(g.relabeled(perm)) == base


def test_canonical_form_separates_nonisomorphic():
    path = generate_graph("path", n=4)
    star = generate_graph("star", leaves=3)
    assert canonical_form(path) != canonical_form(star)


def test_parse_edge_list_roundtrip():
    text = "# a comment\n4 3\n0 1\n1 2\n2 3\n"
    g = parse_graph(text, "edge-list")
    assert g.n == 4 and g.m == 3
    assert g.has_edge(1, 2)


def test_parse_edge_list_errors():
    with pytest.raises(GraphParseError):
        parse_graph("2 1\n0 0\n", "edge-list")
    with pytest.raises(GraphParseError):
        parse_graph("2 1\n0 5\n", "edge-list")
    with pytest.raises(GraphParseError):
        parse_graph("nonsense\n", "edge-list")


def test_parse_dimacs():
    text = "c comment\np edge 3 2\ne 1 2\ne 2 3\n"
    g = parse_graph(text, "dimacs")
    assert g.n == 3 and g.m == 2
    assert g.has_edge(0, 1) and g.has_edge(1, 2)
    with pytest.raises(GraphParseError):
        parse_graph("p edge 2 1\ne 0 1\n", "dimacs")
    with pytest.raises(ValueError):
        parse_graph("1 0\n", "adjacency")


def test_generators_shape():
    assert generate_graph("complete", n=5).m == 10
    assert generate_graph("cycle", n=6).degrees() == (2,) * 6
    assert generate_graph("path", n=6).m == 5
    star = generate_graph("star", leaves=4)
    assert star.n == 5 and star.max_degree == 4
    grid = generate_graph("grid", rows=3, cols=4)
    assert grid.n == 12 and grid.m == 17
    pete = generate_graph("petersen")
    assert pete.n == 10 and pete.m == 15
    assert pete.degrees() == (3,) * 10
    with pytest.raises(ValueError):
        generate_graph("moebius")
    with pytest.raises(ValueError):
        generate_graph("cycle")


def test_random_regular_is_regular_and_reproducible():
    g1 = generate_graph("random-regular", n=10, degree=3, seed=42)
    g2 = generate_graph("random-regular", n=10, degree=3, seed=42)
    g3 = generate_graph("random-regular", n=10, degree=3, seed=43)
    assert g1 == g2
    assert g1.degrees() == (3,) * 10
    assert g3.degrees() == (3,) * 10
    with pytest.raises(ValueError):
        generate_graph("random-regular", n=5, degree=3, seed=1)  # odd n*d


def test_profile_complete_graph():
    # Neighborhood of any K5 vertex is K4: only singleton independent sets.
    prof = neighborhood_profile(generate_graph("complete", n=5))
    assert prof.delta == 4
    assert prof.t == (4, 0, 0, 0)
    assert prof.t_tilde == (3, 0, 0)
    assert not prof.is_binomial()
    z = prof.z_polynomial()
    zt = prof.z_tilde_polynomial()
    assert z.coefficients == (1, 4)
    assert zt.coefficients == (1, 3)


def test_profile_triangle_free_is_binomial():
    prof = neighborhood_profile(generate_graph("petersen"))
    assert prof.delta == 3
    assert prof.t == (3, 3, 1)
    assert prof.t_tilde == (2, 1)
    assert prof.is_binomial()


def test_profile_star():
    prof = neighborhood_profile(generate_graph("star", leaves=4))
    assert prof.delta == 4
    # The hub sees 4 pairwise nonadjacent leaves.
    assert prof.t == (4, 6, 4, 1)
    assert prof.is_binomial()


def test_profile_rejects_edgeless():
    with pytest.raises(ValueError):
        neighborhood_profile(Graph(3, []))


def test_profile_json_shape():
    data = neighborhood_profile(generate_graph("cycle", n=5)).to_json()
    assert data["delta"] == 2
    assert all(isinstance(s, str) for s in data["t"])
    assert all(isinstance(s, str) for s in data["t_tilde"])


def _connected_subsets_brute(g, v0, k):
    from itertools import combinations

    found = set()
    for rest in combinations([v for v in range(g.n) if v != v0], k - 1):
        sub = frozenset(rest) | {v0}
        if g.induced(sorted(sub)).is_connected():
            found.add(sub)
    return found


def test_connected_subset_enumeration_matches_brute_force():
    rng = random.Random(3)
    for trial in range(8):
        n = rng.randrange(4, 8)
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < 0.45
        ]
        g = Graph(n, edges)
        for k in range(1, min(5, n) + 1):
            got = set(enumerate_connected_subsets(g, 0, k))
            assert got == _connected_subsets_brute(g, 0, k)


def test_connected_subsets_exact_size_only():
    g = generate_graph("path", n=5)
    sizes = {len(s) for s in enumerate_connected_subsets(g, 2, 3)}
    assert sizes == {3}
    # On a path, a connected set containing vertex 2 is an interval.
    assert len(list(enumerate_connected_subsets(g, 2, 3))) == 3
