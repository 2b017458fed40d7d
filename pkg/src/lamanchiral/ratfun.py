"""Rational functions with factored denominators, plus exact matrix kernels.

A ``RatFun`` is a polynomial numerator over a *multiset* of polynomial
denominator factors.  We deliberately do not compute multivariate GCDs:
denominators only ever arise as products of known factors (edge weights,
tree sums, determinants, pair kernels), so keeping the factorisation and
comparing by cross-multiplication is both faster and easier to audit
than reduction to lowest terms.

Factors are normalised to be non-constant and monic in the graded-lex
leading coefficient; constants are folded into the numerator.  Addition
uses the factor-wise max (an lcm that never cancels), multiplication
adds exponents.  ``equals`` is mathematical equality; ``==`` is
structural.

The module also houses the fraction-free (Bareiss) determinant over
polynomial matrices and the adjugate inverse built on it.  Row swaps
keep the elimination's exact divisions exact, so a zero pivot is handled
by pivoting rather than fractions.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .poly import CoeffLike, Poly, Var, parse_fraction

__all__ = ["RatFun", "bareiss_det", "poly_matrix_inverse"]


@lru_cache(maxsize=None)
def _factor_product(factors: tuple) -> Poly:
    """Expanded product of ``f ** e`` pairs; cached since the same factor
    multisets (pair kernels, tree sums) recur throughout a computation."""
    out = Poly(1)
    for f, e in factors:
        out = out * f ** e
    return out


def _gap_product(target: tuple, have: dict) -> Poly | None:
    """Product of the factors missing from ``have`` to reach ``target``."""
    gaps = []
    for f, e in target:
        gap = e - have.get(f, 0)
        if gap:
            gaps.append((f, gap))
    if not gaps:
        return None
    return _factor_product(tuple(gaps))


def _normalise_factors(numer: Poly, factors) -> tuple:
    """Fold constants, make factors monic, merge duplicates, sort."""
    merged: dict = {}
    for f, e in factors:
        if e == 0:
            continue
        if e < 0:
            raise ValueError("negative denominator exponent")
        if f.is_zero():
            raise ZeroDivisionError("zero denominator factor")
        if f.is_constant():
            numer = numer * Poly(Fraction(1) / f.constant_value()) ** e
            continue
        lc = f.leading_coefficient()
        if lc != 1:
            f = f.divide_exact(Poly(lc))
            numer = numer * Poly(Fraction(1) / lc) ** e
        merged[f] = merged.get(f, 0) + e
    if numer.is_zero():
        return numer, ()
    ordered = tuple(sorted(merged.items(), key=lambda fe: fe[0].text()))
    return numer, ordered


class RatFun:
    """numerator / product of registered factors, no implicit cancellation."""

    __slots__ = ("numer", "factors", "_hash")

    def __init__(self, numer: Poly | CoeffLike = 0, factors: Iterable = ()):
        if not isinstance(numer, Poly):
            numer = Poly(numer)
        self.numer, self.factors = _normalise_factors(numer, factors)
        self._hash = None

    @classmethod
    def from_poly(cls, p: Poly) -> "RatFun":
        return cls(p)

    @classmethod
    def zero(cls) -> "RatFun":
        return cls(0)

    @classmethod
    def one(cls) -> "RatFun":
        return cls(1)

    # --- queries ---------------------------------------------------------
    def is_zero(self) -> bool:
        return self.numer.is_zero()

    def is_poly(self) -> bool:
        return not self.factors

    def as_poly(self) -> Poly:
        if self.factors:
            raise ValueError(f"not polynomial: {self.text()}")
        return self.numer

    def denominator_poly(self) -> Poly:
        return _factor_product(self.factors)

    def lift_to(self, target: Iterable) -> Poly:
        """Numerator over the superset denominator ``target``.

        ``target`` is a (factor, exponent) collection containing this
        value's denominator factor-wise.  Lifting multiplies one factor at
        a time, which keeps the intermediate polynomials compressed.
        """
        have = dict(self.factors)
        numer = self.numer
        for f, e in target:
            gap = e - have.pop(f, 0)
            if gap < 0:
                raise ValueError("target denominator is not a superset")
            for _ in range(gap):
                numer = numer * f
        if have:
            raise ValueError("target denominator is not a superset")
        return numer

    def vars(self) -> set:
        out = self.numer.vars()
        for f, _ in self.factors:
            out |= f.vars()
        return out

    # --- structural equality ----------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.numer == other.numer and self.factors == other.factors

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.numer, self.factors))
        return self._hash

    # --- mathematical equality ----------------------------------------------
    def equals(self, other: "RatFun | Poly | CoeffLike") -> bool:
        other = _coerce(other)
        common: dict = {}
        mine = dict(self.factors)
        theirs = dict(other.factors)
        for f, e in mine.items():
            if f in theirs:
                common[f] = min(e, theirs[f])
        lift = _gap_product(other.factors, common)
        left = self.numer if lift is None else self.numer * lift
        lift = _gap_product(self.factors, common)
        right = other.numer if lift is None else other.numer * lift
        return left == right

    # --- arithmetic -----------------------------------------------------------
    def __neg__(self) -> "RatFun":
        return RatFun(-self.numer, self.factors)

    def __add__(self, other) -> "RatFun":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.factors == other.factors:
            return RatFun(self.numer + other.numer, self.factors)
        return RatFun.sum_many((self, other))

    __radd__ = __add__

    @classmethod
    def sum_many(cls, pieces: Iterable["RatFun"]) -> "RatFun":
        """Sum over one common denominator built in a single pass.

        Summing k pieces pairwise rescales the running numerator on every
        step; here each numerator is lifted to the factor-wise lcm exactly
        once.
        """
        live = [p for p in pieces if not p.is_zero()]
        if not live:
            return cls(0)
        if len(live) == 1:
            return live[0]
        first = live[0].factors
        if all(p.factors == first for p in live[1:]):
            total = live[0].numer
            for p in live[1:]:
                total = total + p.numer
            return cls(total, first)
        # group by denominator first: within a group addition is free and the
        # merged numerator is collision-compressed before it pays for a lift
        groups: dict = {}
        for p in live:
            groups.setdefault(p.factors, []).append(p.numer)
        lcm: dict = {}
        for facs in groups:
            for f, e in facs:
                if lcm.get(f, 0) < e:
                    lcm[f] = e
        ordered = tuple(sorted(lcm.items(), key=lambda fe: fe[0].text()))
        pairs = []
        for facs, numers in groups.items():
            numer = numers[0] if len(numers) == 1 else Poly.sum_products(
                [(n, None) for n in numers]
            )
            have = dict(facs)
            gaps = [(f, e - have.get(f, 0)) for f, e in ordered if e != have.get(f, 0)]
            if not gaps:
                pairs.append((numer, None))
                continue
            # lift factor by factor (intermediates stay collision-compressed),
            # leaving the last one to the fused accumulation
            while len(gaps) > 1 or gaps[0][1] > 1:
                f, e = gaps[-1]
                numer = numer * f
                if e == 1:
                    gaps.pop()
                else:
                    gaps[-1] = (f, e - 1)
            pairs.append((numer, gaps[0][0]))
        return cls(Poly.sum_products(pairs), ordered)

    def __sub__(self, other) -> "RatFun":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatFun":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RatFun":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatFun(0)
        merged = dict(self.factors)
        for f, e in other.factors:
            merged[f] = merged.get(f, 0) + e
        return RatFun(self.numer * other.numer, merged.items())

    __rmul__ = __mul__

    def div_poly(self, p: Poly | CoeffLike) -> "RatFun":
        if not isinstance(p, Poly):
            p = Poly(p)
        merged = dict(self.factors)
        merged[p] = merged.get(p, 0) + 1
        return RatFun(self.numer, merged.items())

    def reciprocal(self) -> "RatFun":
        if self.is_zero():
            raise ZeroDivisionError("reciprocal of zero")
        out = RatFun(self.denominator_poly())
        return out.div_poly(self.numer)

    def __truediv__(self, other) -> "RatFun":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.reciprocal()

    def __pow__(self, exp: int) -> "RatFun":
        if exp < 0:
            return self.reciprocal() ** (-exp)
        out = RatFun(1)
        for _ in range(exp):
            out = out * self
        return out

    # --- calculus ----------------------------------------------------------------
    def partial_pieces(self, v: Var) -> list:
        """Quotient-rule derivative left as separate addends.

        Each addend's numerator is a small product (no expanded factor
        cofactors appear); callers hand the list to ``sum_many`` so
        equal denominators merge before any lifting happens.
        """
        pieces = []
        dn = self.numer.partial_derivative(v)
        if not dn.is_zero():
            pieces.append(RatFun(dn, self.factors))
        for k, (f, e) in enumerate(self.factors):
            df = f.partial_derivative(v)
            if df.is_zero():
                continue
            bumped = self.factors[:k] + ((f, e + 1),) + self.factors[k + 1:]
            pieces.append(RatFun(self.numer * (df * Poly(-e)), bumped))
        return pieces

    def partial(self, v: Var) -> "RatFun":
        """Partial derivative by the quotient rule, factors kept factored."""
        pieces = self.partial_pieces(v)
        if not pieces:
            return RatFun(0)
        return RatFun.sum_many(pieces)

    def substitute(self, mapping: Mapping[Var, Poly | CoeffLike]) -> "RatFun":
        numer = self.numer.substitute(mapping)
        out = RatFun(numer)
        for f, e in self.factors:
            g = f.substitute(mapping)
            for _ in range(e):
                out = out.div_poly(g)
        return out

    def eval_rational(self, mapping: Mapping[Var, CoeffLike]) -> Fraction:
        value = self.numer.eval_rational(mapping)
        for f, e in self.factors:
            fv = f.eval_rational(mapping)
            if fv == 0:
                raise ZeroDivisionError(f"denominator factor vanishes: {f.text()}")
            value /= fv ** e
        return value

    # --- output ---------------------------------------------------------------------
    def text(self) -> str:
        if not self.factors:
            return self.numer.text()
        den = "*".join(
            f"({f.text()})" + (f"^{e}" if e > 1 else "") for f, e in self.factors
        )
        return f"({self.numer.text()}) / {den}"

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"RatFun({self.text()})"


def _coerce(value):
    if isinstance(value, RatFun):
        return value
    if isinstance(value, Poly):
        return RatFun(value)
    if isinstance(value, (int, Fraction)):
        return RatFun(Poly(value))
    return NotImplemented


def bareiss_det(matrix: Sequence[Sequence[Poly]]) -> Poly:
    """Determinant of a square polynomial matrix, fraction-free.

    Bareiss one-step elimination: every division is exact (quotients are
    minors of the row-permuted matrix), so the whole computation stays in
    the polynomial ring.
    """
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ValueError("matrix is not square")
    if n == 0:
        return Poly(1)
    m = [list(row) for row in matrix]
    sign = 1
    prev = Poly(1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for p in range(k + 1, n):
                if not m[p][k].is_zero():
                    m[k], m[p] = m[p], m[k]
                    sign = -sign
                    break
            else:
                return Poly(0)
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]).divide_exact(prev)
            m[i][k] = Poly(0)
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def poly_matrix_inverse(matrix: Sequence[Sequence[Poly]]):
    """Adjugate inverse of a polynomial matrix.

    Returns ``(cofactor_transpose, det)`` with the inverse equal to
    ``cofactor_transpose / det`` entrywise.  Determinants of the minors
    are computed fraction-free.
    """
    n = len(matrix)
    det = bareiss_det(matrix)
    if det.is_zero():
        raise ZeroDivisionError("singular matrix")
    adj = [[Poly(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [matrix[r][c] for c in range(n) if c != i]
                for r in range(n) if r != j
            ]
            cof = bareiss_det(minor)
            if (i + j) % 2:
                cof = -cof
            adj[i][j] = cof
    return adj, det
