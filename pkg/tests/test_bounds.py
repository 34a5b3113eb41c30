import math

import jsonschema
import pytest

from chromabound import (
    Graph,
    check_fp_condition,
    complete_graph_bound,
    connected_graphs,
    constants,
    cstar_delta,
    cstar_delta_a_form,
    cstar_graph,
    cstar_graph_opt,
    cstar_graph_series,
    fp_parameters,
    generate_graph,
    graph_id,
    neighborhood_profile,
    sokal_bound,
    verify_zero_free,
)
from chromabound.schemas import BOUND_REPORT_SCHEMA


def test_degree_bound_values():
    assert sokal_bound(2).value == pytest.approx(13.23, abs=0.005)
    assert sokal_bound(3).value == pytest.approx(21.14, abs=0.005)
    assert cstar_delta(2).value == pytest.approx(10.715, abs=0.005)
    assert cstar_delta(3).value == pytest.approx(17.563, abs=0.005)
    assert complete_graph_bound(2) == pytest.approx(9.899, abs=0.001)
    assert complete_graph_bound(6) == pytest.approx(33.248, abs=0.001)


def test_degree_bound_validation():
    for fn in (sokal_bound, cstar_delta, cstar_delta_a_form):
        with pytest.raises(ValueError):
            fn(1)
    with pytest.raises(ValueError):
        complete_graph_bound(1)


def test_improved_bound_two_parameterizations_agree():
    for delta in (2, 3, 4, 6, 10, 15):
        assert cstar_delta(delta).value == pytest.approx(
            cstar_delta_a_form(delta).value, rel=1e-9
        )


def test_improvement_ordering():
    for delta in range(2, 12):
        s = sokal_bound(delta).value
        c = cstar_delta(delta).value
        k = complete_graph_bound(delta)
        assert delta < k < c < s


def test_complete_graph_bound_closed_form():
    for delta in (2, 3, 7, 30):
        disc = math.sqrt(2.0 * delta * delta - delta)
        want = (delta - 1) ** 2 / (3 * delta - 1 - 2 * disc)
        assert complete_graph_bound(delta) == pytest.approx(want, rel=1e-12)


def test_constants():
    cs = constants()
    assert cs["K"] == pytest.approx(7.963906, abs=1e-5)
    assert 6.906 < cs["K_star"] < 6.908


def test_per_graph_bound_triangle_free_matches_degree_bound():
    # A binomial profile reproduces the degree-only optimization.
    for g in (generate_graph("petersen"), generate_graph("cycle", n=8)):
        rep = cstar_graph(g)
        assert rep.c_star_graph == pytest.approx(
            cstar_delta(g.max_degree).value, rel=1e-9
        )


def test_per_graph_bound_complete_graphs():
    for k in (3, 4, 5, 6):
        rep = cstar_graph(generate_graph("complete", n=k))
        assert rep.c_star_graph == pytest.approx(
            complete_graph_bound(k - 1), rel=1e-6
        )


def test_per_graph_bound_never_exceeds_degree_bound():
    for n in range(2, 6):
        for g in connected_graphs(n):
            rep = cstar_graph(g)
            if rep.c_star_graph is not None:
                assert rep.c_star_graph <= rep.c_star_delta * (1 + 1e-9)
                assert rep.c_star_graph > g.max_degree


def test_per_graph_bound_degenerate_cases():
    with pytest.raises(ValueError):
        cstar_graph(Graph(3, []))
    rep = cstar_graph(Graph(2, [(0, 1)]))
    assert rep.c_star_graph is None
    assert rep.delta == 1
    assert rep.c_star_delta == pytest.approx(cstar_delta(2).value)


def test_opt_result_geometry():
    g = generate_graph("complete", n=4)
    prof = neighborhood_profile(g)
    opt = cstar_graph_opt(g)
    z = prof.z_polynomial()
    assert 0 < opt.argmin
    assert z(opt.argmin) < 2.0
    assert opt.value == pytest.approx(complete_graph_bound(3), rel=1e-6)


def test_fp_parameters_satisfy_condition_above_bound():
    # At any q above the per-graph bound the optimizing (a, x) pair
    # must make the convergence inequality hold.
    for g in (
        generate_graph("complete", n=3),
        generate_graph("cycle", n=5),
        generate_graph("complete", n=5),
    ):
        a, x = fp_parameters(g)
        assert a > 0 and x > 0
        q = cstar_graph(g).c_star_graph * 1.05
        # The geometric tail certificate dies off slowly this close to
        # the bound, so a deep truncation is needed.
        rep = check_fp_condition(g, q, a, 256)
        assert rep.status == "satisfied"


def test_series_form_agrees_with_optimization():
    for g in (
        generate_graph("complete", n=3),
        generate_graph("complete", n=4),
        generate_graph("cycle", n=5),
    ):
        series_value = cstar_graph_series(g, 64)
        direct = cstar_graph(g).c_star_graph
        assert series_value == pytest.approx(direct, abs=1e-3)
        with pytest.raises(ValueError):
            cstar_graph_series(g, 4)


def test_bound_report_json():
    rep = cstar_graph(generate_graph("complete", n=4))
    data = rep.to_json()
    jsonschema.validate(data, BOUND_REPORT_SCHEMA)
    assert data["delta"] == 3
    assert data["zero_free_verified"] is False
    assert data["max_root_modulus"] is None


def test_graph_id_is_isomorphism_invariant():
    g = generate_graph("cycle", n=6)
    h = g.relabeled([5, 3, 1, 0, 2, 4])
    assert graph_id(g) == graph_id(h)
    assert graph_id(g) != graph_id(generate_graph("path", n=6))


def test_verify_zero_free_triangle():
    rep = verify_zero_free(generate_graph("complete", n=3))
    assert rep.zero_free_verified
    assert rep.max_root_modulus == pytest.approx(2.0, abs=1e-8)
    assert rep.c_star_graph == pytest.approx(complete_graph_bound(2), rel=1e-6)
    data = rep.to_json()
    jsonschema.validate(data, BOUND_REPORT_SCHEMA)
    assert data["zero_free_verified"] is True


def test_verify_zero_free_degenerate_graphs():
    rep = verify_zero_free(Graph(2, [(0, 1)]))
    assert rep.zero_free_verified
    assert rep.max_root_modulus == pytest.approx(1.0, abs=1e-10)
    rep = verify_zero_free(Graph(1, []))
    assert rep.zero_free_verified
    assert rep.max_root_modulus == 0.0
