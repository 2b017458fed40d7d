"""Recursive weight states for Type I' constructions, and their integrals.

Every Type I' graph carries a *weight state*: a table ``f`` of
polynomials in the box variables ``r_k, s_k`` (one pair per move),
indexed by (vertex, oriented edge), together with a prefactor
polynomial ``G`` in the box variables and the per-vertex momenta
``lambda_v``.  The bilinear form

    W = sum_{v,e} f_{v,e} * (lambda_v | zfrak_e)

collects the table; the value of the associated operation with up to
``N`` derivative insertions is the exact unit-box integral of
``exp(W) * G`` truncated at zfrak-degree ``N``.  Everything here is a
polynomial with rational coefficients, so the integral is elementary:
``r**a`` integrates to ``1/(a+1)``.

The one-dimensional analogue collapses to a residue formula in a single
variable; ``residue_d1`` implements that closed form and
``residue_d1_dmodule_check`` confirms it transforms correctly under
multiplication by coordinates and momenta.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import factorial
from typing import NamedTuple

from .errors import (
    DuplicateVertex,
    InputError,
    MissingParentEdge,
    NonpositiveOrder,
    TruncationTooLarge,
)
from .jouanolou import Certificate
from .laman import parse_sequence
from .limits import MAX_TRUNCATION_ORDER, STATE_MAX_VERTICES, max_vertices
from .poly import Poly, Var

__all__ = [
    "WeightState",
    "MuResult",
    "wedge2",
    "base_state",
    "extend",
    "weight_polynomial",
    "state_from_sequence",
    "momentum_residuals",
    "mu_constant",
    "mu_truncated",
    "triangle_oracle",
    "residue_d1",
    "residue_d1_dmodule_check",
    "verify_momentum_conservation",
    "random_sequence",
]

COMPONENTS = (1, 2)


def _lam(v: str, c: int) -> Poly:
    return Poly.var(Var.lam(v, c))


def wedge2(a: str, b: str) -> Poly:
    """lambda_a wedge lambda_b in components: a1*b2 - a2*b1."""
    return _lam(a, 1) * _lam(b, 2) - _lam(a, 2) * _lam(b, 1)


def _pairing(v: str, edge: tuple) -> Poly:
    """(lambda_v | zfrak_e) = sum over components."""
    t, h = edge
    out = Poly(0)
    for c in COMPONENTS:
        out = out + _lam(v, c) * Poly.var(Var.zfrak(t, h, c))
    return out


class WeightState(NamedTuple):
    """Immutable snapshot of the recursion after ``moves_used`` moves.

    ``edges`` are oriented (tail, head) pairs in creation order; the
    base edge points at ``o`` and every later vertex enters as the tail
    of its two new edges.  ``f`` maps (vertex, edge) to a Poly in the
    box variables; absent keys are zero.
    """

    o: str
    vertices: tuple
    edges: tuple
    f: dict
    G: Poly
    moves_used: int


class MuResult(NamedTuple):
    mode: str  # "constant" or "truncated(N)"
    value: Poly


def base_state(o: str, v: str) -> WeightState:
    """Single oriented edge (v -> o) with f = -1 and G = 1."""
    o, v = str(o), str(v)
    if o == v:
        raise DuplicateVertex(f"base vertices coincide at {o!r}")
    edge = (v, o)
    return WeightState(o, (o, v), (edge,), {(v, edge): Poly(-1)}, Poly(1), 0)


def _match_parent(state: WeightState, parent) -> tuple:
    a, b = (str(x) for x in parent)
    for edge in state.edges:
        if {edge[0], edge[1]} == {a, b}:
            return edge
    raise MissingParentEdge(f"parent edge {(a, b)!r} is not in the graph")


def extend(state: WeightState, parent, new: str, track_g: bool = True) -> WeightState:
    """One move: attach ``new`` across ``parent``, updating f and G.

    The parent edge's stored orientation (i, j) fixes all signs; the
    base vertex only ever appears as a head, so i is never o.  The f
    update has three stages: redistribute the parent column over the
    two new edges, fill the new row from the updated rows of i and j,
    then subtract the new vertex's own pairing.  G picks up the wedge
    of the old parent column against the new momentum, one factor of
    r, and the row substitution lambda_i -> lambda_i + (1-s) lambda_new
    (and lambda_j -> lambda_j + s lambda_new when j is not o).

    G grows multiplicatively with depth while f stays small; checks
    that interrogate only the f table (momentum conservation on long
    random sequences) pass ``track_g=False`` and get ``G=None``.
    """
    new = str(new)
    if new in state.vertices:
        raise DuplicateVertex(f"vertex {new!r} already present")
    i, j = _match_parent(state, parent)
    k = state.moves_used + 2  # first added vertex gets r_2, s_2
    r, s = Poly.var(Var.boxr(k)), Poly.var(Var.boxs(k))
    one_m_r, one_m_s = Poly(1) - r, Poly(1) - s

    parent_edge = (i, j)
    e_new_i, e_new_j = (new, i), (new, j)
    f = dict(state.f)

    # stage 1: split the parent column across the two fresh edges
    old_col = [(v, fv) for (v, e), fv in state.f.items() if e == parent_edge]
    for v, fv in old_col:
        f[(v, parent_edge)] = r * fv
        spread = one_m_r * fv
        f[(v, e_new_j)] = f.get((v, e_new_j), Poly(0)) + spread
        f[(v, e_new_i)] = f.get((v, e_new_i), Poly(0)) - spread

    # stage 2: the new row, from the (updated) rows of i and j
    edges = state.edges + (e_new_i, e_new_j)
    for e in edges:
        acc = Poly(0)
        fi = f.get((i, e))
        if fi is not None:
            acc = acc + one_m_s * fi
        if j != state.o:
            fj = f.get((j, e))
            if fj is not None:
                acc = acc + s * fj
        if not acc.is_zero():
            f[(new, e)] = acc

    # stage 3: the new vertex's own pairing enters with a minus sign
    f[(new, e_new_i)] = f.get((new, e_new_i), Poly(0)) - one_m_s
    f[(new, e_new_j)] = f.get((new, e_new_j), Poly(0)) - s
    for key in [key for key, fv in f.items() if fv.is_zero()]:
        del f[key]

    # G: wedge the pre-move parent column against the new momentum
    G = None
    if track_g and state.G is not None:
        wedge_factor = Poly(0)
        for v, fv in old_col:
            wedge_factor = wedge_factor + fv * wedge2(v, new)
        if state.moves_used == 0:
            wedge_factor = -wedge_factor
        sub = {}
        for c in COMPONENTS:
            sub[Var.lam(i, c)] = _lam(i, c) + one_m_s * _lam(new, c)
            if j != state.o:
                sub[Var.lam(j, c)] = _lam(j, c) + s * _lam(new, c)
        G = wedge_factor * r * state.G.substitute(sub)

    return WeightState(
        state.o, state.vertices + (new,), edges, f, G, state.moves_used + 1
    )


def weight_polynomial(state: WeightState) -> Poly:
    """W = sum f_{v,e} (lambda_v | zfrak_e)."""
    out = Poly(0)
    for (v, e), fv in state.f.items():
        out = out + fv * _pairing(v, e)
    return out


def state_from_sequence(seq) -> WeightState:
    """Fold ``extend`` over a parsed or JSON-shaped construction sequence."""
    if isinstance(seq, dict):
        seq = parse_sequence(seq)
    (o, v1), moves = seq
    guard = max_vertices(STATE_MAX_VERTICES)
    if len(moves) + 2 > guard:
        raise InputError(
            f"weight states limited to {guard} vertices "
            "(set LAMANCHIRAL_MAX_VERTICES to override)"
        )
    state = base_state(o, v1)
    for parent, new in moves:
        state = extend(state, parent, new)
    return state


def momentum_residuals(state: WeightState) -> dict:
    """Deviation of each signed column sum from -delta; empty when exact.

    For vertices u, v != o the table must satisfy
    ``sum_e rho(e, u) f_{v,e} = -delta_{u,v}`` where rho is +1 when u
    is the tail of e and -1 when u is the head.
    """
    bad = {}
    inner = [v for v in state.vertices if v != state.o]
    for v in inner:
        for u in inner:
            total = Poly(-1) if u == v else Poly(0)
            for e in state.edges:
                if e[0] == u:
                    rho = 1
                elif e[1] == u:
                    rho = -1
                else:
                    continue
                fv = state.f.get((v, e))
                if fv is not None:
                    total = total - fv if rho > 0 else total + fv
            if not total.is_zero():
                bad[(v, u)] = -total
    return bad


def mu_constant(seq) -> MuResult:
    """Box integral of G alone: the value with no derivative insertions."""
    state = state_from_sequence(seq)
    return MuResult("constant", state.G.box_integrate())


def mu_truncated(seq, order: int) -> MuResult:
    """Box integral of exp(W) G, cut at total zfrak-degree ``order``.

    W is linear in the zfrak variables, so the cut series is just
    ``sum_{m<=order} W^m/m!``.
    """
    if order < 0:
        raise NonpositiveOrder(f"truncation order must be >= 0, got {order}")
    if order > MAX_TRUNCATION_ORDER:
        raise TruncationTooLarge(
            f"truncation order {order} exceeds the guard {MAX_TRUNCATION_ORDER}"
        )
    state = state_from_sequence(seq)
    w = weight_polynomial(state)
    series = Poly(1)
    power = Poly(1)
    for m in range(1, order + 1):
        power = power * w * Poly(Fraction(1, m))
        series = series + power
    return MuResult(f"truncated({order})", (series * state.G).box_integrate())


def triangle_oracle(order: int) -> Poly:
    """Series expansion of the closed-form one-loop answer.

    With zfrak = zf_2o - zf_21 - zf_1o, a = (lambda_1|zfrak) and
    b = (lambda_2|zfrak), the exact value is

        -(lambda_1 ^ lambda_2) * exp(-(lambda_2|zf_2o) - (lambda_1|zf_1o))
            * sum_{m,n} (-a)^m b^n / (m+n+2)!

    (the simplex integral of l1^m l2^n is m! n! / (m+n+2)!).  The
    output keeps zfrak-degrees up to ``order``.
    """
    if order < 0:
        raise NonpositiveOrder(f"series order must be >= 0, got {order}")
    zf = {}
    for c in COMPONENTS:
        zf[c] = (
            Poly.var(Var.zfrak("2", "o", c))
            - Poly.var(Var.zfrak("2", "1", c))
            - Poly.var(Var.zfrak("1", "o", c))
        )
    a = _lam("1", 1) * zf[1] + _lam("1", 2) * zf[2]
    b = _lam("2", 1) * zf[1] + _lam("2", 2) * zf[2]

    exponent = -_pairing("2", ("2", "o")) - _pairing("1", ("1", "o"))
    prefactor = Poly(1)
    power = Poly(1)
    for m in range(1, order + 1):
        power = power * exponent * Poly(Fraction(1, m))
        prefactor = prefactor + power

    simplex = Poly(0)
    a_pow = [Poly(1)]
    b_pow = [Poly(1)]
    for _ in range(order):
        a_pow.append(a_pow[-1] * -a)
        b_pow.append(b_pow[-1] * b)
    for m in range(order + 1):
        for n in range(order + 1 - m):
            simplex = simplex + a_pow[m] * b_pow[n] * Poly(
                Fraction(1, factorial(m + n + 2))
            )

    full = -wedge2("1", "2") * prefactor * simplex
    return full.truncate_degree(("zfrak",), order)


# --- the one-dimensional residue form ------------------------------------


def residue_d1(g: Poly, n: int) -> Poly:
    """((d/dz1 + lambda_1)^(n-1) g(z1, w)) / (n-1)!  at z1 = w.

    ``g`` is a polynomial in z_1^1 and z_2^1; the result lives in the
    coordinate w and the momentum lambda_1.
    """
    if n <= 0:
        raise NonpositiveOrder(f"pole order must be >= 1, got {n}")
    z1, z2 = Var.z("1", 1), Var.z("2", 1)
    w = Poly.var(Var.wcoord())
    lam = _lam("1", 1)
    h = g.substitute({z2: w})
    for _ in range(n - 1):
        h = h.partial_derivative(z1) + h * lam
    h = h.substitute({z1: w})
    return h * Poly(Fraction(1, factorial(n - 1)))


def _random_g(rng: random.Random) -> Poly:
    z1, z2 = Var.z("1", 1), Var.z("2", 1)
    g = Poly(rng.randint(-2, 2))
    for _ in range(rng.randint(1, 4)):
        term = Poly(rng.randint(-3, 3))
        for _ in range(rng.randint(0, 3)):
            term = term * Poly.var(rng.choice((z1, z2)))
        g = g + term
    return g


def residue_d1_dmodule_check(samples: int = 20, seed: int = 0) -> Certificate:
    """Transformation rules of the residue form, on seeded random inputs.

    Writing mu(g, n) for the residue at pole order n, the target-side
    module structure demands, for every polynomial g:

      (a) mu(z1 g, n)           = w mu(g, n) + d/dlambda_1 mu(g, n)
      (b) mu(z2 g, n)           = w mu(g, n)
      (c) mu(-dg/dz1, n) + n mu(g, n+1) = lambda_1 mu(g, n)
      (d) mu(-dg/dz2, n) - n mu(g, n+1) = -d/dw mu(g, n) - lambda_1 mu(g, n)

    (c)/(d) are momentum multiplication on the source written through
    the quotient rule; in (d) the total momentum acts as -d/dw.
    """
    rng = random.Random(seed)
    z1, z2 = Var.z("1", 1), Var.z("2", 1)
    wv, lamv = Var.wcoord(), Var.lam("1", 1)
    w, lam = Poly.var(wv), Poly.var(lamv)
    for k in range(samples):
        g = _random_g(rng)
        n = rng.randint(1, 4)
        mu = residue_d1(g, n)
        mu_next = residue_d1(g, n + 1)
        checks = (
            ("a", residue_d1(g * Poly.var(z1), n), w * mu + mu.partial_derivative(lamv)),
            ("b", residue_d1(g * Poly.var(z2), n), w * mu),
            (
                "c",
                residue_d1(-g.partial_derivative(z1), n) + Poly(n) * mu_next,
                lam * mu,
            ),
            (
                "d",
                residue_d1(-g.partial_derivative(z2), n) - Poly(n) * mu_next,
                -mu.partial_derivative(wv) - lam * mu,
            ),
        )
        for rule, lhs, rhs in checks:
            if lhs != rhs:
                return Certificate(
                    False, "residue-dmodule", f"rule ({rule}) fails on sample {k} (n={n})"
                )
    return Certificate(True, "residue-dmodule", f"{samples} samples, seed {seed}")


# --- seeded momentum-conservation sweep -----------------------------------


def random_sequence(rng: random.Random, vertex_cap: int = 8) -> dict:
    """A random Type I' construction sequence on at most ``vertex_cap`` vertices."""
    total = rng.randint(2, vertex_cap)
    edges = [("1", "o")]
    moves = []
    for k in range(2, total):
        parent = list(rng.choice(edges))
        new = str(k)
        rng.shuffle(parent)  # unordered pair; exercise both spellings
        moves.append({"parent": parent, "new": new})
        edges.append((new, parent[0]))
        edges.append((new, parent[1]))
    return {"base": ["o", "1"], "moves": moves}


def verify_momentum_conservation(
    seed: int = 0, samples: int = 25, vertex_cap: int = 8
) -> Certificate:
    """Signed column sums equal -delta after every move, on seeded sequences."""
    rng = random.Random(seed)
    states = 0
    for k in range(samples):
        seq = random_sequence(rng, vertex_cap)
        (o, v1), moves = parse_sequence(seq)
        state = base_state(o, v1)
        for step, (parent, new) in enumerate(moves):
            state = extend(state, parent, new, track_g=False)
            bad = momentum_residuals(state)
            if bad:
                where = ", ".join(f"(v={v}, u={u})" for v, u in sorted(bad))
                return Certificate(
                    False,
                    "momentum",
                    f"sequence {k} move {step}: nonzero residual at {where}",
                )
            states += 1
    return Certificate(
        True, "momentum", f"{samples} sequences ({states} states), seed {seed}"
    )
