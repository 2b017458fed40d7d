"""Rational functions over the polynomial ring, plus the small matrix helpers."""

from fractions import Fraction

import pytest

from lamanchiral.poly import Poly, Var
from lamanchiral.ratfun import RatFun, bareiss_det, poly_matrix_inverse

T1 = Var.tweight("e1")
T2 = Var.tweight("e2")
T3 = Var.tweight("e3")

t1 = Poly.var(T1)
t2 = Poly.var(T2)
t3 = Poly.var(T3)


def test_cross_denominator_addition():
    got = RatFun(Poly(1), [(t1, 1)]) + RatFun(Poly(1), [(t2, 1)])
    assert got.equals(RatFun(t1 + t2, [(t1, 1), (t2, 1)]))


def test_sum_many_matches_pairwise():
    parts = [RatFun(Poly(1), [(t, 1)]) for t in (t1, t2, t3)]
    acc = RatFun(Poly(0))
    for p in parts:
        acc = acc + p
    assert RatFun.sum_many(parts).equals(acc)
    assert RatFun.sum_many([]).is_zero()


def test_partial_quotient_rule():
    # d/dt (1/t) = -1/t^2
    f = RatFun(Poly(1), [(t1, 1)])
    assert f.partial(T1).equals(RatFun(Poly(-1), [(t1, 2)]))
    # product embedded in a quotient: d/dt (t2/t1)
    g = RatFun(t2, [(t1, 1)])
    assert g.partial(T1).equals(RatFun(Poly(0) - t2, [(t1, 2)]))
    assert g.partial(T2).equals(RatFun(Poly(1), [(t1, 1)]))


def test_partial_pieces_assemble_to_partial():
    f = RatFun(t1 * t2 + Poly(1), [(t1 + t2, 2), (t1, 1)])
    assert RatFun.sum_many(f.partial_pieces(T1)).equals(f.partial(T1))


def test_substitute_and_eval():
    f = RatFun(t1 + t2, [(t1, 1)])
    g = f.substitute({T2: t1 * Poly(2)})
    assert g.equals(RatFun(Poly(3), []))
    assert f.eval_rational({T1: Fraction(1, 2), T2: Fraction(1, 3)}) == Fraction(5, 3)
    with pytest.raises(ZeroDivisionError):
        f.eval_rational({T1: 0, T2: 1})


def test_equals_is_cross_multiplicative():
    a = RatFun(t1 * t1 - t2 * t2, [(t1 + t2, 1)])
    b = RatFun(t1 - t2, [])
    assert a.equals(b)
    assert not a.equals(b + RatFun(Poly(1)))


def test_pow_and_reciprocal():
    f = RatFun(t1, [(t1 + t2, 1)])
    assert (f ** 2).equals(f * f)
    assert (f ** 0).equals(RatFun(Poly(1)))
    assert f.reciprocal().equals(RatFun(t1 + t2, [(t1, 1)]))
    with pytest.raises(ZeroDivisionError):
        RatFun(Poly(0)).reciprocal()


def test_bareiss_det_matches_cofactor_expansion():
    m = [
        [t1, Poly(1), Poly(0)],
        [Poly(2), t2, Poly(1)],
        [Poly(1), Poly(0), t3],
    ]
    cofactor = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    assert bareiss_det(m) == cofactor


def test_bareiss_det_small_cases():
    assert bareiss_det([]) == Poly(1)
    assert bareiss_det([[t1]]) == t1
    assert bareiss_det([[t1, t2], [t2, t1]]) == t1 * t1 - t2 * t2


def test_poly_matrix_inverse_is_adjugate():
    m = [[t1, Poly(1)], [Poly(1), t2]]
    adj, det = poly_matrix_inverse(m)
    assert det == t1 * t2 - Poly(1)
    # adj * m == det * I
    for i in range(2):
        for j in range(2):
            entry = sum((adj[i][k] * m[k][j] for k in range(2)), Poly(0))
            assert entry == (det if i == j else Poly(0))


def test_ratfun_text_shows_factored_denominator():
    f = RatFun(t2, [(t1 + t2, 1)])
    assert f.text() == "(1*t_e2) / (1*t_e1 + 1*t_e2)"
    assert RatFun(t1).text() == "1*t_e1"
