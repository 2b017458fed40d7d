"""Exterior-algebra elements over the rational-function coefficients.

An ``ExtForm`` maps words of anticommuting generators (sorted tuples of
``Var``; in practice the ``dzbar`` generators) to ``RatFun``
coefficients.  Multiplication merges words with the Koszul sign and
kills repeated generators.  The antiholomorphic differential ``dbar``
lives here as well: it differentiates the coefficients with respect to
every ``zbar`` variable and wedges the matching generator in from the
left.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .poly import Poly, Var
from .ratfun import RatFun

__all__ = ["ExtForm", "dbar_pieces_of"]

Word = tuple  # tuple[Var, ...], strictly ascending


def _dbar_into(word: Word, coeff: RatFun, acc: dict) -> None:
    """Quotient-rule pieces of ``dbar`` on one term, into per-word buckets."""
    for v in sorted(v for v in coeff.vars() if v.kind == "zbar"):
        merged = _merge_words((Var.dzbar(v.ids[0], v.comp),), word)
        if merged is None:
            continue
        target, sign = merged
        bucket = acc.setdefault(target, [])
        for piece in coeff.partial_pieces(v):
            bucket.append(-piece if sign < 0 else piece)


def dbar_pieces_of(pieces: Mapping[Word, Iterable[RatFun]]) -> dict:
    """``dbar`` pieces of an unassembled piece dict (dbar is linear)."""
    acc: dict = {}
    for word, coeffs in pieces.items():
        for coeff in coeffs:
            _dbar_into(word, coeff, acc)
    return acc


def _merge_words(a: Word, b: Word):
    """Shuffle-merge two sorted words; returns (word, sign) or None."""
    out = []
    sign = 1
    i = j = 0
    while i < len(a) and j < len(b):
        va, vb = a[i], b[j]
        if va is vb:
            return None
        if va < vb:
            out.append(va)
            i += 1
        else:
            out.append(vb)
            j += 1
            # vb jumps over the remaining letters of a
            if (len(a) - i) % 2:
                sign = -sign
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out), sign


class ExtForm:
    """Finite sum of generator words with ``RatFun`` coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, RatFun] | None = None):
        clean: dict = {}
        if terms:
            for word, coeff in terms.items():
                if not isinstance(coeff, RatFun):
                    coeff = RatFun(coeff)
                if coeff.is_zero():
                    continue
                for k in range(1, len(word)):
                    if not word[k - 1] < word[k]:
                        raise ValueError("generator word must be strictly ascending")
                clean[word] = coeff
        self._terms = clean

    # --- constructors -----------------------------------------------------
    @classmethod
    def zero(cls) -> "ExtForm":
        return cls()

    @classmethod
    def scalar(cls, coeff) -> "ExtForm":
        return cls({(): coeff if isinstance(coeff, RatFun) else RatFun(coeff)})

    @classmethod
    def gen(cls, v: Var, coeff=1) -> "ExtForm":
        return cls({(v,): coeff if isinstance(coeff, RatFun) else RatFun(coeff)})

    @classmethod
    def sum_forms(cls, forms: Iterable["ExtForm"]) -> "ExtForm":
        """Sum many forms, combining each word's coefficients in one pass."""
        buckets: dict = {}
        for form in forms:
            for w, c in form._terms.items():
                buckets.setdefault(w, []).append(c)
        out: dict = {}
        for w, pieces in buckets.items():
            total = pieces[0] if len(pieces) == 1 else RatFun.sum_many(pieces)
            if not total.is_zero():
                out[w] = total
        result = cls()
        result._terms = out
        return result

    # --- queries ------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> Iterator:
        for word in sorted(self._terms, key=lambda w: (len(w), [v._key for v in w])):
            yield word, self._terms[word]

    def coefficient(self, word: Iterable[Var]) -> RatFun:
        return self._terms.get(tuple(word), RatFun(0))

    def degrees(self) -> set:
        return {len(w) for w in self._terms}

    def num_terms(self) -> int:
        return len(self._terms)

    # --- equality -------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtForm):
            return NotImplemented
        return self._terms == other._terms

    def equals(self, other: "ExtForm") -> bool:
        """Mathematical equality, word by word via cross-multiplication."""
        words = set(self._terms) | set(other._terms)
        zero = RatFun(0)
        return all(
            self._terms.get(w, zero).equals(other._terms.get(w, zero))
            for w in words
        )

    # --- algebra ---------------------------------------------------------------
    def __neg__(self) -> "ExtForm":
        return ExtForm({w: -c for w, c in self._terms.items()})

    def __add__(self, other) -> "ExtForm":
        if not isinstance(other, ExtForm):
            return NotImplemented
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        result = ExtForm()
        result._terms = out
        return result

    def __sub__(self, other) -> "ExtForm":
        if not isinstance(other, ExtForm):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar) -> "ExtForm":
        """Scalar multiplication by a RatFun / Poly / rational."""
        if isinstance(scalar, ExtForm):
            return self.wedge(scalar)
        coeff = scalar if isinstance(scalar, RatFun) else RatFun(scalar)
        return ExtForm({w: c * coeff for w, c in self._terms.items()})

    __rmul__ = __mul__

    def wedge(self, other: "ExtForm") -> "ExtForm":
        out: dict = {}
        for wa, ca in self._terms.items():
            for wb, cb in other._terms.items():
                merged = _merge_words(wa, wb)
                if merged is None:
                    continue
                word, sign = merged
                c = ca * cb
                if sign < 0:
                    c = -c
                s = out.get(word)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(word, None)
                else:
                    out[word] = s
        result = ExtForm()
        result._terms = out
        return result

    # --- calculus -----------------------------------------------------------------
    def partial(self, v: Var) -> "ExtForm":
        """Coefficient-wise derivative (degree-0 operator)."""
        return ExtForm({w: c.partial(v) for w, c in self._terms.items()})

    def partial_pieces(self, v: Var) -> dict:
        """Coefficient-wise derivative as raw quotient-rule pieces per word."""
        return {w: c.partial_pieces(v) for w, c in self._terms.items()}

    def dbar_pieces(self) -> dict:
        """Raw derivative pieces of ``dbar``, keyed by target word.

        Each value is a list of ``RatFun`` whose sum is the ``dbar``
        coefficient on that word.  Callers that combine several
        differentials (or compare against something else) can merge the
        piece lists and pay for one common-denominator pass instead of
        one per form.
        """
        acc: dict = {}
        for word, coeff in self._terms.items():
            _dbar_into(word, coeff, acc)
        return acc

    def dbar(self) -> "ExtForm":
        """Antiholomorphic differential.

        Differentiates every coefficient with respect to each of its
        ``zbar`` variables and wedges the matching ``dzbar`` generator in
        from the left.
        """
        out: dict = {}
        for w, pieces in self.dbar_pieces().items():
            total = pieces[0] if len(pieces) == 1 else RatFun.sum_many(pieces)
            if not total.is_zero():
                out[w] = total
        result = ExtForm()
        result._terms = out
        return result

    def dbar_matches(self, target: "ExtForm") -> bool:
        """True iff ``self.dbar() == target``, checked word by word.

        Cheaper than assembling the differential and comparing: the raw
        derivative pieces and the negated target coefficient go through
        one grouped summation per word, which must cancel to zero.
        """
        buckets = self.dbar_pieces()
        for w, c in target._terms.items():
            buckets.setdefault(w, []).append(-c)
        return all(RatFun.sum_many(ps).is_zero() for ps in buckets.values())

    # --- output -------------------------------------------------------------------
    def text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for word, coeff in self.terms():
            if word:
                gens = "^".join(v.name for v in word)
                parts.append(f"[{coeff.text()}] {gens}")
            else:
                parts.append(f"[{coeff.text()}]")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"ExtForm({self.text()})"
