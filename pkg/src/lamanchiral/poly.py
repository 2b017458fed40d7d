"""Exact sparse multivariate polynomials over the rationals.

The whole package runs on one representation: a polynomial is a dict
from monomials to nonzero exact coefficients (``int`` where possible,
``Fraction`` otherwise).  No floats anywhere; equality of polynomials is
equality of dicts.

Internally a monomial is a single arbitrary-precision integer: every
variable owns a disjoint 16-bit exponent field, so multiplying two
monomials is one integer addition.  At the API boundary (``terms``,
``leading_term``, ``coefficient``) monomials appear in their canonical
form, a tuple of ``(Var, exponent)`` pairs sorted by the global
variable order.

Variables carry a *kind* tag (momentum component, edge coordinate,
box variable, holomorphic/antiholomorphic coordinate, ...) plus string
ids, and the kind/ids/component triple fixes a deterministic total
order.  That order drives the graded-lexicographic term order used for
printing, for JSON output and for the exact division inside the
fraction-free determinant.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key
from math import gcd
from typing import Iterable, Iterator, Mapping, Sequence, Union

__all__ = [
    "Var",
    "Poly",
    "Monomial",
    "wedge2",
    "dot2",
    "format_fraction",
    "parse_fraction",
]

Monomial = tuple  # tuple[tuple[Var, int], ...], sorted by Var order

# Kind tags in sort priority.  The order itself is a convention; it only
# has to be fixed once and applied everywhere.
_KINDS = (
    "lambda",   # momentum attached to a vertex, per component
    "zfrak",    # formal edge coordinate, per directed edge and component
    "boxr",     # box variable of the first kind, one per move
    "boxs",     # box variable of the second kind, one per move
    "z",        # holomorphic point coordinate
    "zbar",     # antiholomorphic point coordinate
    "dzbar",    # exterior generator paired with zbar
    "tweight",  # symbolic edge weight
    "wcoord",   # residue base-point coordinate
    "aux",      # anything else (test scaffolding etc.)
)
_KIND_RANK = {kind: rank for rank, kind in enumerate(_KINDS)}

CoeffLike = Union[int, Fraction, str]


def parse_fraction(text: CoeffLike) -> Fraction:
    """Accept ``int``, ``Fraction`` or a string like ``"-3/2"``."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    return Fraction(str(text).strip())


def format_fraction(q) -> str:
    """``p/q`` with the slash only when the denominator is not 1."""
    return str(q)


def _intify(c):
    """Store integral rationals as plain ``int`` (much faster arithmetic)."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Var:
    """An interned, totally ordered indeterminate.

    Do not call the constructor directly in normal code; use the factory
    classmethods, which also fix the canonical display names.
    """

    __slots__ = ("kind", "ids", "comp", "_key", "_name", "_hash", "_shift")
    _pool: dict = {}

    def __new__(cls, kind: str, ids: Sequence[str] = (), comp: int = 0):
        key = (kind, tuple(str(i) for i in ids), int(comp))
        cached = cls._pool.get(key)
        if cached is not None:
            return cached
        if kind not in _KIND_RANK:
            raise ValueError(f"unknown variable kind {kind!r}")
        self = object.__new__(cls)
        self.kind, self.ids, self.comp = kind, key[1], key[2]
        self._key = (_KIND_RANK[kind], key[1], key[2])
        self._name = _var_name(kind, key[1], key[2])
        self._hash = hash(key)
        slot = _alloc_slot(kind)
        self._shift = slot * _EXP_BITS
        _SLOT_VARS[slot] = self
        cls._pool[key] = self
        return self

    # --- factories ----------------------------------------------------
    @classmethod
    def lam(cls, vertex: str, comp: int) -> "Var":
        return cls("lambda", (vertex,), comp)

    @classmethod
    def zfrak(cls, tail: str, head: str, comp: int) -> "Var":
        return cls("zfrak", (tail, head), comp)

    @classmethod
    def boxr(cls, index: int) -> "Var":
        return cls("boxr", (str(index),))

    @classmethod
    def boxs(cls, index: int) -> "Var":
        return cls("boxs", (str(index),))

    @classmethod
    def z(cls, point: str, comp: int) -> "Var":
        return cls("z", (point,), comp)

    @classmethod
    def zbar(cls, point: str, comp: int) -> "Var":
        return cls("zbar", (point,), comp)

    @classmethod
    def dzbar(cls, point: str, comp: int) -> "Var":
        return cls("dzbar", (point,), comp)

    @classmethod
    def tweight(cls, edge: str) -> "Var":
        return cls("tweight", (edge,))

    @classmethod
    def wcoord(cls, comp: int = 1) -> "Var":
        return cls("wcoord", (), comp)

    @classmethod
    def aux(cls, name: str) -> "Var":
        return cls("aux", (name,))

    # --- protocol -----------------------------------------------------
    @property
    def name(self) -> str:
        return self._name

    def __repr__(self) -> str:
        return self._name

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        return self is other or (
            isinstance(other, Var) and self._key == other._key
        )

    def __lt__(self, other: "Var") -> bool:
        return self._key < other._key

    def __le__(self, other: "Var") -> bool:
        return self._key <= other._key

    def __gt__(self, other: "Var") -> bool:
        return self._key > other._key

    def __ge__(self, other: "Var") -> bool:
        return self._key >= other._key


def _var_name(kind: str, ids: tuple, comp: int) -> str:
    if kind == "lambda":
        return f"l_{ids[0]}_{comp}"
    if kind == "zfrak":
        return f"zf_{ids[0]}_{ids[1]}_{comp}"
    if kind == "boxr":
        return f"r{ids[0]}"
    if kind == "boxs":
        return f"s{ids[0]}"
    if kind == "z":
        return f"z_{ids[0]}_{comp}"
    if kind == "zbar":
        return f"zb_{ids[0]}_{comp}"
    if kind == "dzbar":
        return f"dzb_{ids[0]}_{comp}"
    if kind == "tweight":
        return f"t_{ids[0]}"
    if kind == "wcoord":
        return "w" if comp == 1 else f"w{comp}"
    return str(ids[0])  # aux


# --- packed monomial helpers ------------------------------------------
#
# A monomial is an int; variable ``v`` occupies the 16-bit field at
# ``v._shift``.  Exponents must stay below 2**16, which every algorithm
# in this package respects by orders of magnitude.
#
# The width of the packed integers — and with it the cost of every
# monomial add and hash — is set by the highest slot a polynomial
# touches, so slots are banked by kind: kinds that appear together in
# hot computations get adjacent low banks, and a bank that fills up
# spills into the open-ended region at the top.  Which test created
# unrelated variables first then has no effect on key width.

_EXP_BITS = 16
_EXP_MASK = (1 << _EXP_BITS) - 1
_EXP_LIMIT = 1 << _EXP_BITS

# bank -> (first slot, slot count); "zz" pools the point coordinates
_SLOT_BANKS = {
    "zz": (0, 32),        # z and zbar, always used together
    "lambda": (32, 24),
    "box": (56, 16),      # boxr and boxs
    "zfrak": (72, 72),
    "tweight": (144, 32),
    "wcoord": (176, 4),
    "dzbar": (180, 12),
}
_BANK_OF_KIND = {
    "z": "zz",
    "zbar": "zz",
    "lambda": "lambda",
    "boxr": "box",
    "boxs": "box",
    "zfrak": "zfrak",
    "tweight": "tweight",
    "wcoord": "wcoord",
    "dzbar": "dzbar",
}
_SPILL_SLOT = 192  # first slot past the banks; aux and overflow land here

_bank_next = {bank: base for bank, (base, _) in _SLOT_BANKS.items()}
_spill_next = _SPILL_SLOT
_SLOT_VARS: list = [None] * _SPILL_SLOT


def _alloc_slot(kind: str) -> int:
    global _spill_next
    bank = _BANK_OF_KIND.get(kind)
    if bank is not None:
        base, span = _SLOT_BANKS[bank]
        slot = _bank_next[bank]
        if slot < base + span:
            _bank_next[bank] = slot + 1
            return slot
    slot = _spill_next
    _spill_next = slot + 1
    _SLOT_VARS.append(None)
    return slot


_EMPTY = 0


def _iter_packed(m: int):
    """Yield ``(Var, exponent)`` fields of a packed monomial, slot order."""
    while m:
        low = (m & -m).bit_length() - 1
        shift = low - (low % _EXP_BITS)
        e = (m >> shift) & _EXP_MASK
        yield _SLOT_VARS[shift // _EXP_BITS], e
        m -= e << shift


def _mono_unpack(m: int) -> Monomial:
    """Packed int -> canonical tuple of (Var, exp) in the variable order."""
    pairs = list(_iter_packed(m))
    pairs.sort(key=lambda p: p[0]._key)
    return tuple(pairs)


def _mono_pack(pairs) -> int:
    m = 0
    for v, e in pairs:
        if not 0 < e < _EXP_LIMIT:
            raise ValueError(f"exponent {e} out of range for {v.name}")
        m += e << v._shift
    return m


def _mono_deg(m: int) -> int:
    d = 0
    while m:
        low = (m & -m).bit_length() - 1
        shift = low - (low % _EXP_BITS)
        e = (m >> shift) & _EXP_MASK
        d += e
        m -= e << shift
    return d


def _tuple_cmp(a: Monomial, b: Monomial) -> int:
    """Graded lexicographic order on canonical tuples; >0 when a larger."""
    da = sum(e for _, e in a)
    db = sum(e for _, e in b)
    if da != db:
        return -1 if da < db else 1
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        va, ea = a[i]
        vb, eb = b[j]
        if va is vb:
            if ea != eb:
                return 1 if ea > eb else -1
            i += 1
            j += 1
        elif va._key < vb._key:
            # a has positive exponent on an earlier variable
            return 1
        else:
            return -1
    if i < la:
        return 1
    if j < lb:
        return -1
    return 0


_UNPACK_CACHE: dict = {}


def _unpack_cached(m: int) -> Monomial:
    t = _UNPACK_CACHE.get(m)
    if t is None:
        t = _mono_unpack(m)
        _UNPACK_CACHE[m] = t
    return t


def _mono_cmp(a: int, b: int) -> int:
    if a == b:
        return 0
    return _tuple_cmp(_unpack_cached(a), _unpack_cached(b))


_MONO_SORT_KEY = cmp_to_key(_mono_cmp)


def _mono_divide(a: int, b: int):
    """``a / b`` as a packed monomial, or None when b does not divide a."""
    if b == 0:
        return a
    mm = b
    while mm:
        low = (mm & -mm).bit_length() - 1
        shift = low - (low % _EXP_BITS)
        eb = (mm >> shift) & _EXP_MASK
        if ((a >> shift) & _EXP_MASK) < eb:
            return None
        mm -= eb << shift
    return a - b


def _mono_text(m: Monomial) -> str:
    if not m:
        return "1"
    parts = []
    for v, e in m:
        parts.append(v.name if e == 1 else f"{v.name}^{e}")
    return "*".join(parts)


class Poly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("_terms", "_hash", "_sorted", "_text")

    def __init__(self, value: CoeffLike = 0):
        coeff = _intify(parse_fraction(value))
        self._terms = {_EMPTY: coeff} if coeff else {}
        self._hash = None
        self._sorted = None
        self._text = None

    # --- construction ---------------------------------------------------
    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        """Takes ownership of ``terms``; zero coefficients are dropped."""
        self = object.__new__(cls)
        self._terms = {m: c for m, c in terms.items() if c}
        self._hash = None
        self._sorted = None
        self._text = None
        return self

    @classmethod
    def _wrap(cls, terms: dict) -> "Poly":
        """Like ``_raw`` but trusts the caller to have dropped zeros."""
        self = object.__new__(cls)
        self._terms = terms
        self._hash = None
        self._sorted = None
        self._text = None
        return self

    @classmethod
    def zero(cls) -> "Poly":
        return _ZERO

    @classmethod
    def one(cls) -> "Poly":
        return _ONE

    @classmethod
    def const(cls, value: CoeffLike) -> "Poly":
        return cls(value)

    @classmethod
    def var(cls, v: Var, exp: int = 1) -> "Poly":
        if exp < 0:
            raise ValueError("negative exponent")
        if exp == 0:
            return _ONE
        if exp >= _EXP_LIMIT:
            raise ValueError(f"exponent {exp} out of range for {v.name}")
        return cls._wrap({exp << v._shift: 1})

    @classmethod
    def term(cls, coeff: CoeffLike, powers: Mapping[Var, int]) -> "Poly":
        c = _intify(parse_fraction(coeff))
        if not c:
            return _ZERO
        for e in powers.values():
            if e < 0:
                raise ValueError("negative exponent")
        mono = _mono_pack((v, e) for v, e in powers.items() if e)
        return cls._wrap({mono: c})

    # --- queries ----------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and _EMPTY in self._terms)

    def constant_value(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        if self.is_constant():
            return self._terms[_EMPTY]
        raise ValueError(f"not a constant polynomial: {self.text()}")

    def num_terms(self) -> int:
        return len(self._terms)

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(_mono_deg(m) for m in self._terms)

    def vars(self) -> set:
        out = set()
        for m in self._terms:
            for v, _ in _iter_packed(m):
                out.add(v)
        return out

    def coefficient(self, powers: Mapping[Var, int]) -> Fraction:
        mono = _mono_pack((v, e) for v, e in powers.items() if e)
        return self._terms.get(mono, Fraction(0))

    def terms(self) -> Iterator:
        """(monomial, coefficient) pairs, largest monomial first."""
        if self._sorted is None:
            packed = sorted(self._terms, key=_MONO_SORT_KEY, reverse=True)
            self._sorted = tuple(
                (_unpack_cached(m), self._terms[m]) for m in packed
            )
        return iter(self._sorted)

    def leading_term(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._terms, key=_MONO_SORT_KEY)
        return _unpack_cached(m), self._terms[m]

    def leading_coefficient(self) -> Fraction:
        return self.leading_term()[1]

    # --- arithmetic --------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({_EMPTY: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> "Poly":
        return Poly._wrap({m: -c for m, c in self._terms.items()})

    def __add__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly._wrap(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return _ZERO
        if len(a) > len(b):
            a, b = b, a
        if len(a) == 1:
            (ma, ca), = a.items()
            if not ma and ca == 1:
                return other if a is self._terms else self
            # single monomial: merged keys cannot collide
            return Poly._wrap({ma + m: ca * c for m, c in b.items()})
        # Scale both operands to integer coefficients up front: the inner
        # loop then runs on plain ints (no gcd per operation) and fractions
        # are rebuilt once per output monomial.
        da = db = 1
        for c in a.values():
            q = c.denominator
            if q != 1:
                da = da * q // gcd(da, q)
        for c in b.values():
            q = c.denominator
            if q != 1:
                db = db * q // gcd(db, q)
        if da == 1:
            ia = list(a.items())
        else:
            ia = [(m, c.numerator * (da // c.denominator)) for m, c in a.items()]
        if db == 1:
            ib = list(b.items())
        else:
            ib = [(m, c.numerator * (db // c.denominator)) for m, c in b.items()]
        out: dict = {}
        get = out.get
        for ma, ca in ia:
            if ca == 1:
                for mb, cb in ib:
                    m = ma + mb
                    s = get(m)
                    out[m] = cb if s is None else s + cb
            elif ca == -1:
                for mb, cb in ib:
                    m = ma + mb
                    s = get(m)
                    out[m] = -cb if s is None else s - cb
            else:
                for mb, cb in ib:
                    m = ma + mb
                    s = get(m)
                    out[m] = ca * cb if s is None else s + ca * cb
        den = da * db
        if den == 1:
            return Poly._wrap({m: n for m, n in out.items() if n})
        return Poly._wrap(
            {m: q for m, n in out.items() if n
             for q in (_intify(Fraction(n, den)),)}
        )

    __rmul__ = __mul__

    @classmethod
    def sum_products(cls, pairs) -> "Poly":
        """Accumulate ``sum(a * b)`` in one pass, ``b=None`` meaning ``a``.

        Skips the intermediate polynomials a multiply-then-add chain would
        allocate; the workhorse under rational-function addition.
        """
        out: dict = {}
        get = out.get
        for a, b in pairs:
            if b is None:
                for m, c in a._terms.items():
                    s = get(m)
                    if s is None:
                        out[m] = c
                    else:
                        out[m] = s + c
                continue
            ta, tb = a._terms, b._terms
            if not ta or not tb:
                continue
            if len(ta) > len(tb):
                ta, tb = tb, ta
            items = list(tb.items())
            for ma, ca in ta.items():
                # unit coefficients dominate (kernel factors are +-1)
                if ca == 1:
                    for mb, cb in items:
                        m = ma + mb
                        s = get(m)
                        out[m] = cb if s is None else s + cb
                elif ca == -1:
                    for mb, cb in items:
                        m = ma + mb
                        s = get(m)
                        out[m] = -cb if s is None else s - cb
                else:
                    for mb, cb in items:
                        m = ma + mb
                        s = get(m)
                        out[m] = ca * cb if s is None else s + ca * cb
        return cls._raw(out)

    def __pow__(self, exp: int) -> "Poly":
        if exp < 0:
            raise ValueError("negative exponent")
        result = _ONE
        base = self
        e = exp
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # --- calculus-flavoured operations --------------------------------------
    def substitute(self, mapping: Mapping[Var, "Poly | CoeffLike"]) -> "Poly":
        """Simultaneous substitution of polynomials for variables."""
        if not mapping:
            return self
        images = {v: (p if isinstance(p, Poly) else Poly(p)) for v, p in mapping.items()}
        out = _ZERO
        # cache powers of the images since the same variable recurs
        powers: dict = {}
        for m, c in self._terms.items():
            rest = _EMPTY
            piece = None
            for v, e in _iter_packed(m):
                img = images.get(v)
                if img is None:
                    rest += e << v._shift
                else:
                    key = (v, e)
                    pw = powers.get(key)
                    if pw is None:
                        pw = img ** e
                        powers[key] = pw
                    piece = pw if piece is None else piece * pw
            mono = Poly._wrap({rest: c})
            out = out + (mono if piece is None else piece * mono)
        return out

    def partial_derivative(self, v: Var) -> "Poly":
        # distinct monomials stay distinct after the exponent drop, so no
        # accumulation or zero-filtering is needed
        shift = v._shift
        unit = 1 << shift
        out: dict = {}
        for m, c in self._terms.items():
            e = (m >> shift) & _EXP_MASK
            if e:
                out[m - unit] = c * e
        return Poly._wrap(out)

    def box_integrate(self, variables: Iterable[Var] | None = None) -> "Poly":
        """Integrate each listed variable over the unit interval.

        ``v ** a`` integrates to ``1 / (a + 1)``.  With ``variables=None``
        every box variable (kinds ``boxr`` and ``boxs``) present in the
        polynomial is integrated out.
        """
        if variables is None:
            targets = {v for v in self.vars() if v.kind in ("boxr", "boxs")}
        else:
            targets = set(variables)
        if not targets:
            return self
        out: dict = {}
        for m, c in self._terms.items():
            nm = m
            for v, e in _iter_packed(m):
                if v in targets:
                    nm -= e << v._shift
                    c = Fraction(c, e + 1)
            s = out.get(nm)
            out[nm] = c if s is None else s + c
        return Poly._raw(out)

    def truncate_degree(self, kinds: tuple, max_degree: int) -> "Poly":
        """Drop monomials whose total degree in the given kinds exceeds the bound."""
        out = {}
        for m, c in self._terms.items():
            d = sum(e for v, e in _iter_packed(m) if v.kind in kinds)
            if d <= max_degree:
                out[m] = c
        return Poly._wrap(out)

    def degree_in_kinds(self, kinds: tuple) -> int:
        if not self._terms:
            return -1
        return max(
            sum(e for v, e in _iter_packed(m) if v.kind in kinds)
            for m in self._terms
        )

    def eval_rational(self, mapping: Mapping[Var, CoeffLike]) -> Fraction:
        values = {v: parse_fraction(x) for v, x in mapping.items()}
        total = Fraction(0)
        for m, c in self._terms.items():
            piece = c
            for v, e in _iter_packed(m):
                if v not in values:
                    raise ValueError(f"no value supplied for {v.name}")
                piece *= values[v] ** e
            total += piece
        return total

    def divide_exact(self, divisor: "Poly") -> "Poly":
        """Exact polynomial division; raises ValueError on any remainder.

        Single-divisor division in the graded-lex order.  Used by the
        fraction-free determinant, where divisions are exact by
        construction.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return _ZERO
        if divisor.is_constant():
            k = Fraction(1) / divisor.constant_value()
            return Poly._wrap({m: _intify(c * k) for m, c in self._terms.items()})
        dm = max(divisor._terms, key=_MONO_SORT_KEY)
        dc = divisor._terms[dm]
        rem = dict(self._terms)
        quo: dict = {}
        while rem:
            m = max(rem, key=_MONO_SORT_KEY)
            q = _mono_divide(m, dm)
            if q is None:
                raise ValueError("division is not exact")
            qc = Fraction(rem[m]) / dc
            quo[q] = _intify(quo.get(q, 0) + qc)
            # rem -= (qc * q) * divisor
            for m2, c2 in divisor._terms.items():
                mm = q + m2
                s = rem.get(mm, 0) - qc * c2
                if s:
                    rem[mm] = s
                else:
                    rem.pop(mm, None)
        return Poly._raw(quo)

    # --- canonical output ----------------------------------------------------
    def text(self) -> str:
        if self._text is None:
            if not self._terms:
                self._text = "0"
            else:
                chunks = []
                for m, c in self.terms():
                    body = format_fraction(abs(c)) if not m else f"{format_fraction(abs(c))}*{_mono_text(m)}"
                    if not chunks:
                        chunks.append(body if c > 0 else f"-{body}")
                    else:
                        chunks.append(f" + {body}" if c > 0 else f" - {body}")
                self._text = "".join(chunks)
        return self._text

    def to_json_dict(self) -> dict:
        return {_mono_text(m): format_fraction(c) for m, c in self.terms()}

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"Poly({self.text()})"


def _coerce(value) -> "Poly":
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction, str)):
        return Poly(value)
    return NotImplemented


_ZERO = Poly(0)
_ONE = Poly(1)


# --- two-component helpers ------------------------------------------------


def wedge2(a: Sequence[Poly], b: Sequence[Poly]) -> Poly:
    """Antisymmetric pairing a^1 b^2 - a^2 b^1 of two-component objects."""
    return a[0] * b[1] - a[1] * b[0]


def dot2(a: Sequence[Poly], b: Sequence[Poly]) -> Poly:
    """Symmetric pairing a^1 b^1 + a^2 b^2 of two-component objects."""
    return a[0] * b[0] + a[1] * b[1]
