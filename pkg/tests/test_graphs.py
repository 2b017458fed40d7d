"""Directed multigraphs, spanning trees, Laplacians, and Green's functions."""

import random
from fractions import Fraction

import pytest

from lamanchiral.errors import (
    DisconnectedGraph,
    DuplicateEdge,
    DuplicateVertex,
    InputError,
    MissingEdge,
    MissingVertex,
    SelfLoop,
    TooFewVertices,
)
from lamanchiral.graphs import (
    DirectedGraph,
    Edge,
    connected_catalog,
    cut_sets,
    green_function,
    kirchhoff_det,
    kirchhoff_tree_sum,
    laplacian_det,
    laplacian_inverse,
    parse_weights,
    random_multigraph,
    symbolic_weights,
    weighted_laplacian,
)
from lamanchiral.poly import Poly, Var
from lamanchiral.ratfun import RatFun


def single_edge():
    return DirectedGraph(["1", "o"], [("e", "1", "o")])


def parallel_pair():
    return DirectedGraph(["1", "o"], [("e1", "1", "o"), ("e2", "1", "o")])


def triangle():
    return DirectedGraph(
        ["1", "2", "3"],
        [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")],
    )


def unit_weights(g):
    return {e.id: Poly(1) for e in g.edges}


def test_incidence_matrix_single_edge():
    assert single_edge().incidence_matrix() == [[1, -1]]


def test_incidence_rows_of_parallel_edges_coincide():
    m = parallel_pair().incidence_matrix()
    assert m[0] == m[1] == [1, -1]


def test_incidence_matrix_triangle():
    m = triangle().incidence_matrix()
    for row in m:
        assert sorted(row) == [-1, 0, 1]
        assert sum(row) == 0


def test_rho_signs():
    g = triangle()
    assert g.rho("a", "1") == 1
    assert g.rho("a", "2") == -1
    assert g.rho("a", "3") == 0
    with pytest.raises(MissingEdge):
        g.rho("zz", "1")


def test_spanning_tree_counts():
    assert len(single_edge().spanning_trees()) == 1
    assert len(parallel_pair().spanning_trees()) == 2
    assert triangle().spanning_trees() == [("a", "b"), ("a", "c"), ("b", "c")]


def test_spanning_trees_error_paths():
    with pytest.raises(TooFewVertices):
        DirectedGraph(["1"], []).spanning_trees()
    with pytest.raises(DisconnectedGraph):
        DirectedGraph(["1", "2", "3"], [("e", "1", "2")]).spanning_trees()


def test_kirchhoff_det_values():
    g = single_edge()
    t = Poly.var(Var.tweight("e"))
    assert kirchhoff_det(g, symbolic_weights(g)).equals(RatFun(Poly(1), [(t, 1)]))

    g = parallel_pair()
    t1, t2 = Poly.var(Var.tweight("e1")), Poly.var(Var.tweight("e2"))
    want = RatFun(t1 + t2, [(t1, 1), (t2, 1)])
    assert kirchhoff_det(g, symbolic_weights(g)).equals(want)


def test_kirchhoff_triangle():
    g = triangle()
    ta, tb, tc = (Poly.var(Var.tweight(e)) for e in "abc")
    want = RatFun(ta + tb + tc, [(ta, 1), (tb, 1), (tc, 1)])
    assert kirchhoff_det(g, symbolic_weights(g)).equals(want)
    assert laplacian_det(g, symbolic_weights(g)).equals(want)


def test_kirchhoff_tree_sum_is_complement_product():
    g = triangle()
    w = symbolic_weights(g)
    ta, tb, tc = (Poly.var(Var.tweight(e)) for e in "abc")
    # each spanning tree drops exactly one edge
    assert kirchhoff_tree_sum(g, w) == ta + tb + tc


def test_weighted_laplacian_small_cases():
    g = single_edge()
    idx, m = weighted_laplacian(g, symbolic_weights(g))
    assert idx == ("1",)
    t = Poly.var(Var.tweight("e"))
    assert m[0][0].equals(RatFun(Poly(1), [(t, 1)]))

    g = parallel_pair()
    _, m = weighted_laplacian(g, symbolic_weights(g))
    t1, t2 = Poly.var(Var.tweight("e1")), Poly.var(Var.tweight("e2"))
    assert m[0][0].equals(RatFun(t1 + t2, [(t1, 1), (t2, 1)]))


def test_laplacian_at_unit_weights_matches_tree_count():
    g = triangle()
    _, m = weighted_laplacian(g, unit_weights(g))
    vals = [[entry.eval_rational({}) for entry in row] for row in m]
    assert vals == [[2, -1], [-1, 2]]
    # det = number of spanning trees
    assert vals[0][0] * vals[1][1] - vals[0][1] * vals[1][0] == 3


def test_laplacian_row_sums_vanish_before_grounding():
    # reconstruct the full (ungrounded) Laplacian row sums through rho
    g = triangle()
    weights = {e.id: Fraction(1, k + 1) for k, e in enumerate(g.edges)}
    for u in g.vertices:
        total = Fraction(0)
        for v in g.vertices:
            total += sum(
                weights[e.id] * g.rho(e.id, u) * g.rho(e.id, v) for e in g.edges
            )
        assert total == 0


def test_laplacian_inverse_values():
    g = single_edge()
    t = Poly.var(Var.tweight("e"))
    _, inv = laplacian_inverse(g, symbolic_weights(g))
    assert inv[0][0].equals(RatFun(t))

    g = parallel_pair()
    t1, t2 = Poly.var(Var.tweight("e1")), Poly.var(Var.tweight("e2"))
    _, inv = laplacian_inverse(g, symbolic_weights(g))
    assert inv[0][0].equals(RatFun(t1 * t2, [(t1 + t2, 1)]))


def test_laplacian_inverse_triangle_diagonal():
    g = triangle()
    _, inv = laplacian_inverse(g, unit_weights(g))
    assert inv[0][0].eval_rational({}) == Fraction(2, 3)
    assert inv[1][1].eval_rational({}) == Fraction(2, 3)
    assert inv[0][1].eval_rational({}) == Fraction(1, 3)


def test_green_function_single_edge():
    g = single_edge()
    idx, rows = green_function(g, symbolic_weights(g))
    assert idx == ("1",)
    # d applied to its own inverse: the lone entry must be exactly 1
    assert rows[0][0].equals(RatFun(Poly(1)))


def test_green_function_parallel_pair_splits_by_weight():
    g = parallel_pair()
    _, rows = green_function(g, symbolic_weights(g))
    t1, t2 = Poly.var(Var.tweight("e1")), Poly.var(Var.tweight("e2"))
    assert rows[0][0].equals(RatFun(t2, [(t1 + t2, 1)]))
    assert rows[1][0].equals(RatFun(t1, [(t1 + t2, 1)]))


def test_cut_sets():
    assert cut_sets(single_edge(), {"1"}, {"o"}) == [("e",)]
    # both parallel edges must go to disconnect the pair
    assert cut_sets(parallel_pair(), {"1"}, {"o"}) == [("e1", "e2")]
    with pytest.raises(InputError):
        cut_sets(triangle(), {"1"}, {"1"})
    with pytest.raises(MissingVertex):
        cut_sets(triangle(), {"1"}, {"9"})


def test_cut_sets_triangle_exact():
    # every two-tree split of the triangle drops two edges; c is in both
    # cuts that isolate vertex 1 from vertex 3
    assert cut_sets(triangle(), {"1"}, {"3"}) == [("a", "c"), ("b", "c")]
    assert cut_sets(triangle(), {"1", "2"}, {"3"}) == [("b", "c")]


def test_constructor_error_paths():
    with pytest.raises(DuplicateVertex):
        DirectedGraph(["1", "1"], [])
    with pytest.raises(DuplicateEdge):
        DirectedGraph(["1", "2"], [("e", "1", "2"), ("e", "2", "1")])
    with pytest.raises(MissingVertex):
        DirectedGraph(["1"], [("e", "1", "9")])
    with pytest.raises(SelfLoop):
        DirectedGraph(["1"], [("e", "1", "1")])


def test_parse_weights():
    g = single_edge()
    assert parse_weights(g, {"e": "3/2"}) == {"e": Poly(Fraction(3, 2))}
    assert parse_weights(g, {"e": "t"}) == {"e": Poly.var(Var.tweight("e"))}
    with pytest.raises(InputError):
        parse_weights(g, {"e": "0"})
    with pytest.raises(InputError):
        parse_weights(g, {"e": "spam"})
    with pytest.raises(MissingEdge):
        parse_weights(g, {})
    with pytest.raises(MissingEdge):
        parse_weights(g, {"e": "1", "ghost": "1"})


def test_json_round_trip():
    g = triangle()
    h = DirectedGraph.from_json_dict(g.to_json_dict())
    assert h == g
    with pytest.raises(InputError):
        DirectedGraph.from_json_dict({"vertices": ["1"]})
    with pytest.raises(InputError):
        DirectedGraph.from_json_dict({"vertices": ["1", "2"], "edges": [["e", "1", "2"]]})


def test_edge_tuple_and_object_forms_agree():
    a = DirectedGraph(["1", "2"], [("e", "1", "2")])
    b = DirectedGraph(["1", "2"], [Edge("e", "1", "2")])
    assert a == b


def test_connected_catalog_shape():
    cat = connected_catalog(max_vertices=3, max_edges=3)
    assert all(g.is_connected() for g in cat)
    assert all(len(g.vertices) <= 3 and len(g.edges) <= 3 for g in cat)
    assert DirectedGraph(["1", "2"], [("e1", "1", "2")]) in cat
    # deterministic: same call, same order
    assert [repr(g) for g in cat] == [repr(g) for g in connected_catalog(3, 3)]


def test_random_multigraph_is_deterministic():
    a = random_multigraph(random.Random(7))
    b = random_multigraph(random.Random(7))
    assert a == b
    assert a.is_connected()
