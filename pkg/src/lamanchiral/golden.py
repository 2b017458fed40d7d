"""Pinned reference values for the weight-state construction.

Everything here is data plus thin comparison wrappers: the canonical
construction sequences, the hand-checked polynomials they must produce,
and Certificate-returning checks that both the CLI (``verify golden``)
and the test suite call.  Keeping the pinned values in one module means
a regression shows up as a one-line diff against this file.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .chiral import (
    base_state,
    extend,
    mu_constant,
    mu_truncated,
    residue_d1,
    state_from_sequence,
    triangle_oracle,
    wedge2,
)
from .jouanolou import Certificate
from .poly import Poly, Var

__all__ = [
    "TRIANGLE_SEQ",
    "THETA_SEQ",
    "THREELOOP_SEQ",
    "DOUBLE_TRIANGLE_SEQS",
    "ORACLE_SIGN",
    "triangle_coefficient_table",
    "triangle_state_factor",
    "triangle_mu",
    "theta_mu",
    "threeloop_mu",
    "check_triangle",
    "check_theta",
    "check_threeloop",
    "check_d1",
    "GOLDEN_CHECKS",
]


# Canonical sequences: one loop, two loops, three loops, all grown from
# the same base edge (o, 1) with vertex k+1 hanging off edge (k, o).
TRIANGLE_SEQ = {"base": ["o", "1"], "moves": [{"parent": ["1", "o"], "new": "2"}]}
THETA_SEQ = {
    "base": ["o", "1"],
    "moves": [
        {"parent": ["1", "o"], "new": "2"},
        {"parent": ["2", "o"], "new": "3"},
    ],
}
THREELOOP_SEQ = {
    "base": ["o", "1"],
    "moves": [
        {"parent": ["1", "o"], "new": "2"},
        {"parent": ["2", "o"], "new": "3"},
        {"parent": ["3", "o"], "new": "4"},
    ],
}

# The same double-triangle graph built in both move orders; the
# constant operation must not notice the difference.
DOUBLE_TRIANGLE_SEQS = (
    {
        "base": ["o", "1"],
        "moves": [
            {"parent": ["1", "o"], "new": "2"},
            {"parent": ["1", "o"], "new": "3"},
        ],
    },
    {
        "base": ["o", "1"],
        "moves": [
            {"parent": ["1", "o"], "new": "3"},
            {"parent": ["1", "o"], "new": "2"},
        ],
    },
)

# The closed-form one-loop series carries a single leading minus
# relative to the recursion's normalization; pinned once, here.
ORACLE_SIGN = -1


def triangle_coefficient_table() -> dict:
    """The six weight coefficients after the one extending move.

    Keys are (vertex, oriented edge) exactly as ``WeightState.f`` stores
    them; the box variables belong to move index 2.
    """
    r = Poly.var(Var.boxr(2))
    s = Poly.var(Var.boxs(2))
    one = Poly(1)
    return {
        ("1", ("1", "o")): -r,
        ("1", ("2", "1")): one - r,
        ("1", ("2", "o")): r - one,
        ("2", ("1", "o")): -r * (one - s),
        ("2", ("2", "1")): -r * (one - s),
        ("2", ("2", "o")): r * (one - s) - one,
    }


def triangle_state_factor() -> Poly:
    """The one-loop state factor r_2 * l_1 ^ l_2."""
    return Poly.var(Var.boxr(2)) * wedge2("1", "2")


def triangle_mu() -> Poly:
    return Poly(Fraction(1, 2)) * wedge2("1", "2")


def theta_mu() -> Poly:
    """(1/24) (l_1 ^ (l_3 + 2 l_2)) * (l_3 ^ (l_1 + 2 l_2))."""
    a = wedge2("1", "3") + Poly(2) * wedge2("1", "2")
    b = wedge2("3", "1") + Poly(2) * wedge2("3", "2")
    return Poly(Fraction(1, 24)) * a * b


# Three-loop value in the wedge basis, labels as grown by THREELOOP_SEQ,
# each factor written with ascending vertex pair and the rows sorted.
# The cube, the 7/96 row and the 1/8 row are the landmark coefficients.
THREELOOP_WEDGE_TABLE = (
    (Fraction(-1, 96), (("1", "2"), ("1", "2"), ("3", "4"))),
    (Fraction(1, 144), (("1", "2"), ("1", "3"), ("1", "4"))),
    (Fraction(1, 48), (("1", "2"), ("1", "3"), ("2", "4"))),
    (Fraction(1, 48), (("1", "2"), ("1", "3"), ("3", "4"))),
    (Fraction(1, 288), (("1", "2"), ("1", "4"), ("1", "4"))),
    (Fraction(1, 96), (("1", "2"), ("1", "4"), ("2", "4"))),
    (Fraction(1, 96), (("1", "2"), ("1", "4"), ("3", "4"))),
    (Fraction(1, 48), (("1", "2"), ("2", "3"), ("2", "4"))),
    (Fraction(1, 8), (("1", "2"), ("2", "3"), ("3", "4"))),
    (Fraction(1, 96), (("1", "2"), ("2", "4"), ("2", "4"))),
    (Fraction(1, 48), (("1", "2"), ("2", "4"), ("3", "4"))),
    (Fraction(-1, 96), (("1", "2"), ("3", "4"), ("3", "4"))),
    (Fraction(1, 288), (("1", "3"), ("1", "3"), ("1", "4"))),
    (Fraction(1, 96), (("1", "3"), ("1", "3"), ("2", "4"))),
    (Fraction(1, 96), (("1", "3"), ("1", "3"), ("3", "4"))),
    (Fraction(1, 288), (("1", "3"), ("1", "4"), ("1", "4"))),
    (Fraction(1, 96), (("1", "3"), ("1", "4"), ("2", "4"))),
    (Fraction(1, 96), (("1", "3"), ("1", "4"), ("3", "4"))),
    (Fraction(-1, 16), (("1", "3"), ("2", "3"), ("2", "4"))),
    (Fraction(1, 48), (("1", "3"), ("2", "3"), ("3", "4"))),
    (Fraction(1, 96), (("1", "3"), ("2", "4"), ("2", "4"))),
    (Fraction(1, 48), (("1", "3"), ("2", "4"), ("3", "4"))),
    (Fraction(1, 864), (("1", "4"), ("1", "4"), ("1", "4"))),
    (Fraction(1, 288), (("1", "4"), ("1", "4"), ("2", "4"))),
    (Fraction(1, 288), (("1", "4"), ("1", "4"), ("3", "4"))),
    (Fraction(7, 96), (("1", "4"), ("2", "3"), ("2", "3"))),
    (Fraction(1, 288), (("1", "4"), ("2", "4"), ("2", "4"))),
    (Fraction(1, 144), (("1", "4"), ("2", "4"), ("3", "4"))),
)


def threeloop_mu() -> Poly:
    total = Poly(0)
    for coeff, pairs in THREELOOP_WEDGE_TABLE:
        term = Poly(coeff)
        for a, b in pairs:
            term = term * wedge2(a, b)
        total = total + term
    return total


def _poly_mismatch(name: str, got: Poly, want: Poly, what: str) -> Certificate:
    diff = got - want
    mono, coeff = diff.leading_term()
    body = "*".join(f"{v.name}^{e}" if e > 1 else v.name for v, e in mono)
    return Certificate(
        False, name, f"{what}: differs by {coeff}*{body or '1'} (leading term)"
    )


def check_triangle() -> Certificate:
    name = "triangle"
    state = extend(base_state("o", "1"), ("1", "o"), "2")
    table = triangle_coefficient_table()
    if state.f != table:
        keys = sorted(set(state.f) | set(table))
        for key in keys:
            got = state.f.get(key, Poly(0))
            want = table.get(key, Poly(0))
            if got != want:
                return Certificate(
                    False,
                    name,
                    f"coefficient f[{key}]: got {got.text()}, pinned {want.text()}",
                )
    if state.G != triangle_state_factor():
        return _poly_mismatch(name, state.G, triangle_state_factor(), "state factor")
    mu = mu_constant(TRIANGLE_SEQ).value
    if mu != triangle_mu():
        return _poly_mismatch(name, mu, triangle_mu(), "constant value")
    for order in (0, 1, 2):
        got = mu_truncated(TRIANGLE_SEQ, order).value
        want = Poly(ORACLE_SIGN) * triangle_oracle(order)
        if got != want:
            return _poly_mismatch(name, got, want, f"series order {order}")
    return Certificate(
        True,
        name,
        f"table, state factor, constant ({mu.num_terms()} terms), "
        "series orders 0-2 against the simplex route",
    )


def check_theta() -> Certificate:
    name = "theta"
    mu = mu_constant(THETA_SEQ).value
    if mu != theta_mu():
        return _poly_mismatch(name, mu, theta_mu(), "constant value")
    return Certificate(True, name, f"constant value, {mu.num_terms()} terms")


def check_threeloop() -> Certificate:
    name = "threeloop"
    mu = mu_constant(THREELOOP_SEQ).value
    if mu != threeloop_mu():
        return _poly_mismatch(name, mu, threeloop_mu(), "constant value")
    a = mu_constant(DOUBLE_TRIANGLE_SEQS[0]).value
    b = mu_constant(DOUBLE_TRIANGLE_SEQS[1]).value
    if a != b:
        return _poly_mismatch(name, a, b, "double-triangle order dependence")
    return Certificate(
        True,
        name,
        f"constant value, {mu.num_terms()} terms over 28 pinned wedge rows; "
        "double-triangle move orders agree",
    )


def check_d1() -> Certificate:
    name = "d1"
    lam = Poly.var(Var.lam("1", 1))
    for n in range(1, 7):
        got = residue_d1(Poly(1), n)
        want = lam ** (n - 1) * Poly(Fraction(1, factorial(n - 1)))
        if got != want:
            return _poly_mismatch(name, got, want, f"residue at order {n}")
    return Certificate(True, name, "residues at orders 1-6")


GOLDEN_CHECKS = {
    "triangle": check_triangle,
    "theta": check_theta,
    "threeloop": check_threeloop,
    "d1": check_d1,
}
