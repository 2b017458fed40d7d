"""Laman counting checks, Henneberg moves, and the reverse construction search."""

import random

import pytest

from lamanchiral.errors import (
    DuplicateVertex,
    InputError,
    MissingParentEdge,
    MissingVertex,
    NotTypeIPrime,
    SelfLoop,
    TooFewVertices,
)
from lamanchiral.golden import THETA_SEQ, THREELOOP_SEQ, TRIANGLE_SEQ
from lamanchiral.laman import (
    SimpleGraph,
    apply_henneberg,
    find_type1prime_sequence,
    henneberg_one,
    henneberg_one_prime,
    henneberg_two,
    is_laman,
    parse_sequence,
    realize,
)


def k4():
    vs = ["1", "2", "3", "4"]
    return SimpleGraph(vs, [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]])


def k33():
    # bipartite 3+3, all 9 cross edges; the classic graph needing a type-II move
    left, right = ["1", "2", "3"], ["4", "5", "6"]
    return SimpleGraph(left + right, [(a, b) for a in left for b in right])


def test_is_laman_small_examples():
    assert is_laman(SimpleGraph(["o", "1"], [("o", "1")])).ok
    assert is_laman(realize(TRIANGLE_SEQ)).ok
    assert is_laman(realize(THETA_SEQ)).ok
    assert is_laman(realize(THREELOOP_SEQ)).ok


def test_k4_fails_the_count():
    check = is_laman(k4())
    assert not check
    assert check.reason == "|E|=6 > 2|V|-3=5"
    assert check.witness is None


def test_too_few_edges_reason():
    path = SimpleGraph(["1", "2", "3"], [("1", "2"), ("2", "3")])
    check = is_laman(path)
    assert check.reason == "|E|=2 < 2|V|-3=3"


def test_overloaded_subgraph_witness():
    # right count overall, but vertices 1..4 span a full K4
    vs = ["1", "2", "3", "4", "5", "6"]
    edges = [(a, b) for i, a in enumerate(vs[:4]) for b in vs[i + 1:4]]
    edges += [("1", "5"), ("5", "6"), ("6", "2")]
    g = SimpleGraph(vs, edges)
    assert len(g.edges) == 2 * 6 - 3
    check = is_laman(g)
    assert not check.ok
    assert check.witness == ("1", "2", "3", "4")
    assert check.reason == "induced subgraph {1,2,3,4} has 6 edges > 2*4-3=5"


def test_is_laman_guards():
    with pytest.raises(TooFewVertices):
        is_laman(SimpleGraph(["1"], []))
    big = SimpleGraph([str(k) for k in range(13)], [])
    with pytest.raises(InputError):
        is_laman(big)


def test_henneberg_moves_preserve_laman():
    rng = random.Random(3)
    g = SimpleGraph(["o", "1"], [("o", "1")])
    for k in range(6):
        new = f"v{k}"
        if rng.random() < 0.5 or len(g.vertices) < 3:
            parent = rng.choice(g.edges)
            g = henneberg_one_prime(g, new, parent)
        else:
            removed = rng.choice(g.edges)
            third = rng.choice([v for v in g.vertices if v not in removed])
            g = henneberg_two(g, new, removed, third)
        assert is_laman(g).ok


def test_henneberg_one_allows_non_adjacent_attachments():
    tri = realize(TRIANGLE_SEQ)
    square = henneberg_one(tri, "3", "1", "2")
    assert square.has_edge("3", "1") and square.has_edge("3", "2")


def test_henneberg_error_paths():
    g = SimpleGraph(["o", "1", "2"], [("o", "1"), ("o", "2")])
    with pytest.raises(MissingParentEdge):
        henneberg_one_prime(g, "3", ("1", "2"))
    with pytest.raises(DuplicateVertex):
        henneberg_one(g, "1", "o", "2")
    with pytest.raises(MissingVertex):
        henneberg_one(g, "3", "o", "9")
    with pytest.raises(SelfLoop):
        henneberg_one(g, "3", "o", "o")
    with pytest.raises(InputError):
        henneberg_two(g, "3", ("o", "1"), "o")
    with pytest.raises(InputError):
        apply_henneberg(g, "III", "3", ("o", "1"))
    with pytest.raises(InputError):
        apply_henneberg(g, "I", "3")


def test_apply_henneberg_dispatch():
    g = SimpleGraph(["o", "1"], [("o", "1")])
    a = apply_henneberg(g, "Iprime", "2", ("1", "o"))
    b = henneberg_one_prime(g, "2", ("1", "o"))
    assert a == b


def test_realize_theta():
    g = realize(THETA_SEQ)
    assert sorted(g.vertices) == ["1", "2", "3", "o"]
    assert set(g.edges) == {
        ("1", "o"), ("1", "2"), ("2", "o"), ("2", "3"), ("3", "o"),
    }


def test_parse_sequence_errors():
    with pytest.raises(InputError):
        parse_sequence([])
    with pytest.raises(InputError):
        parse_sequence({"base": ["o"]})
    with pytest.raises(SelfLoop):
        parse_sequence({"base": ["o", "o"]})
    with pytest.raises(InputError):
        parse_sequence({"base": ["o", "1"], "moves": [{"parent": ["o", "1"]}]})
    with pytest.raises(InputError):
        parse_sequence({"base": ["o", "1"], "moves": [{"parent": "o1", "new": "2"}]})


def test_realize_rejects_bad_moves():
    with pytest.raises(MissingVertex) as exc:
        realize({"base": ["o", "1"], "moves": [{"parent": ["o", "9"], "new": "2"}]})
    assert "move 0" in str(exc.value)
    with pytest.raises(MissingParentEdge) as exc:
        realize({"base": ["o", "1"], "moves": [
            {"parent": ["1", "o"], "new": "2"},
            {"parent": ["2", "o"], "new": "3"},
            {"parent": ["1", "3"], "new": "4"},  # 1 and 3 are not joined
        ]})
    assert "move 2" in str(exc.value)


def test_find_sequence_on_theta():
    g = realize(THETA_SEQ)
    found = find_type1prime_sequence(g, "o", ("o", "1"))
    assert found == {
        "base": ["o", "1"],
        "moves": [
            {"parent": ["1", "o"], "new": "2"},
            {"parent": ["2", "o"], "new": "3"},
        ],
    }
    assert realize(found) == g


def test_find_sequence_requires_base_edge():
    g = realize(TRIANGLE_SEQ)
    with pytest.raises(InputError):
        find_type1prime_sequence(g, "2", ("o", "1"))
    with pytest.raises(NotTypeIPrime):
        # base pair exists but is not an edge
        find_type1prime_sequence(realize(THETA_SEQ), "1", ("1", "3"))


def test_laman_but_not_type1prime():
    g = k33()
    assert is_laman(g).ok
    with pytest.raises(NotTypeIPrime):
        find_type1prime_sequence(g, "1", ("1", "4"))


def test_find_sequence_round_trips_on_made_graphs():
    rng = random.Random(11)
    for trial in range(8):
        g = SimpleGraph(["o", "1"], [("o", "1")])
        for k in range(rng.randrange(1, 5)):
            g = henneberg_one_prime(g, f"v{k}", rng.choice(g.edges))
        seq = find_type1prime_sequence(g, "o", ("o", "1"))
        h = realize(seq)
        # construction order may differ; the graph itself must not
        assert sorted(h.vertices) == sorted(g.vertices)
        assert set(h.edges) == set(g.edges)
