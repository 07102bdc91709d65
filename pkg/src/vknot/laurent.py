"""Exact Laurent polynomials in the ordered variables (G, s, t).

Coefficients are Python integers.  ``G`` is a formal variable; the relation
``G = 1 - s t`` is only imposed by an explicit :func:`substitute`.  Units of
the ring are ``±s^a t^b``; ``G`` is not a unit, so unit normalization never
touches G-exponents.

>>> p = parse_poly("G*s + G*t + s^2*t^2 - 1")
>>> str(coeff_of_power(p, "G", 1))
't + s'
>>> str(substitute(parse_poly("-1 - s*t + s + t"), "s", T ** -1))
't^-1 - 2 + t'
"""

from __future__ import annotations

from typing import Iterable, Mapping, NamedTuple, Union

from . import kernel
from .errors import NegativePowerOfNonUnit, NotDivisible, ParseError

VARIABLES = ("G", "s", "t")
_VAR_INDEX = {v: i for i, v in enumerate(VARIABLES)}
_EXP_LIMIT = kernel.HALF


class Monomial(NamedTuple):
    """Exponent triple; tuple order is the canonical lex order on (G, s, t)."""

    g: int
    s: int
    t: int


class LaurentPoly:
    """Immutable sparse Laurent polynomial with integer coefficients.

    Build one from a mapping ``{(e_G, e_s, e_t): coeff}`` or use the
    constants :data:`G`, :data:`S`, :data:`T` and ring operations.  Integers
    are accepted wherever a polynomial operand is expected.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int, int], int] | None = None):
        packed = {}
        for exps, c in (terms or {}).items():
            g, s, t = exps
            if max(abs(g), abs(s), abs(t)) >= _EXP_LIMIT:
                raise OverflowError(f"exponent out of supported range: {exps}")
            k = kernel.pack(g, s, t)
            v = packed.get(k, 0) + int(c)
            if v:
                packed[k] = v
            else:
                packed.pop(k, None)
        self._terms = packed
        self._hash = None

    @classmethod
    def _wrap(cls, packed: dict) -> LaurentPoly:
        obj = cls.__new__(cls)
        obj._terms = packed
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls._wrap({0: int(c)} if c else {})

    @classmethod
    def monomial(cls, coeff: int = 1, g: int = 0, s: int = 0, t: int = 0) -> LaurentPoly:
        return cls({(g, s, t): coeff})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, int]:
        """Terms keyed by :class:`Monomial`, in ascending monomial order."""
        return {Monomial(*kernel.unpack(k)): self._terms[k] for k in sorted(self._terms)}

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """True for ``±s^a t^b`` (no G)."""
        if len(self._terms) != 1:
            return False
        ((k, c),) = self._terms.items()
        return c in (1, -1) and kernel.unpack(k)[0] == 0

    def degree_range(self, var: str) -> tuple[int, int]:
        """(min, max) exponent of ``var``; (0, 0) for the zero polynomial."""
        i = _VAR_INDEX[var]
        exps = [kernel.unpack(k)[i] for k in self._terms]
        return (min(exps), max(exps)) if exps else (0, 0)

    def evaluate(self, g=0, s=1, t=1):
        """Numeric value at a point (exact for int/Fraction arguments)."""
        total = 0
        for k, c in self._terms.items():
            eg, es, et = kernel.unpack(k)
            total += c * g**eg * s**es * t**et
        return total

    # -- ring operations ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self):
        return LaurentPoly._wrap({k: -c for k, c in self._terms.items()})

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                del out[k]
        return LaurentPoly._wrap(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly._wrap(kernel.sub(self._terms, other._terms))

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return ZERO
        _check_product_range(self, other)
        return LaurentPoly._wrap(kernel.mul(self._terms, other._terms))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self._terms) != 1:
                raise NegativePowerOfNonUnit(f"cannot invert {self}")
            ((k, c),) = self._terms.items()
            if c not in (1, -1):
                raise NegativePowerOfNonUnit(f"cannot invert {self}")
            return LaurentPoly._wrap({-k: c}) ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __str__(self):
        return to_canonical_string(self)

    def __repr__(self):
        return f"LaurentPoly({to_canonical_string(self)!r})"

    def __reduce__(self):
        return (parse_poly, (to_canonical_string(self),))


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    return NotImplemented


def _exp_bounds(p: LaurentPoly) -> tuple[int, int]:
    lo = hi = 0
    for k in p._terms:
        e = kernel.unpack(k)
        lo = min(lo, *e)
        hi = max(hi, *e)
    return lo, hi


def _check_product_range(a: LaurentPoly, b: LaurentPoly) -> None:
    lo_a, hi_a = _exp_bounds(a)
    lo_b, hi_b = _exp_bounds(b)
    if hi_a + hi_b >= _EXP_LIMIT or lo_a + lo_b <= -_EXP_LIMIT:
        raise OverflowError("product exponent out of supported range")


PolyLike = Union[LaurentPoly, int]

ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
G = LaurentPoly.monomial(g=1)
S = LaurentPoly.monomial(s=1)
T = LaurentPoly.monomial(t=1)
G_VALUE = 1 - S * T  # the substitution G := 1 - s t


def variable(name: str) -> LaurentPoly:
    return {"G": G, "s": S, "t": T}[name]


# -- functional API ---------------------------------------------------------


def add(p: PolyLike, q: PolyLike) -> LaurentPoly:
    return _coerce(p) + _coerce(q)


def sub(p: PolyLike, q: PolyLike) -> LaurentPoly:
    return _coerce(p) - _coerce(q)


def neg(p: PolyLike) -> LaurentPoly:
    return -_coerce(p)


def mul(p: PolyLike, q: PolyLike) -> LaurentPoly:
    return _coerce(p) * _coerce(q)


def substitute(p: PolyLike, var: str, q: PolyLike) -> LaurentPoly:
    """Replace ``var`` by ``q`` in ``p`` and expand.

    Negative powers of ``var`` are only allowed when ``q`` is a unit
    monomial (for example ``t**-1``); otherwise NegativePowerOfNonUnit.
    """
    p, q = _coerce(p), _coerce(q)
    i = _VAR_INDEX[var]
    by_power: dict[int, dict] = {}
    for k, c in p._terms.items():
        exps = list(kernel.unpack(k))
        e = exps[i]
        exps[i] = 0
        by_power.setdefault(e, {})[kernel.pack(*exps)] = c
    if min(by_power, default=0) < 0 and not (len(q) == 1 and abs(next(iter(q._terms.values()))) == 1):
        raise NegativePowerOfNonUnit(f"{var} appears with a negative exponent and {q} is not a unit")
    out = ZERO
    for e in sorted(by_power):
        out = out + LaurentPoly._wrap(by_power[e]) * q**e
    return out


def coeff_of_power(p: PolyLike, var: str, k: int) -> LaurentPoly:
    """Coefficient of ``var**k`` in ``p``, as a polynomial in the other variables."""
    p = _coerce(p)
    i = _VAR_INDEX[var]
    out = {}
    for key, c in p._terms.items():
        exps = list(kernel.unpack(key))
        if exps[i] == k:
            exps[i] = 0
            out[kernel.pack(*exps)] = c
    return LaurentPoly._wrap(out)


def div_exact(p: PolyLike, q: PolyLike) -> LaurentPoly:
    """Exact quotient ``p / q``; raises NotDivisible if there is a remainder.

    The quotient may not introduce negative powers that ``p`` lacks: in
    each variable its exponents stay >= min(0, lowest exponent in p).  So
    ``t / s`` is rejected while ``((st)^-3 - 1) / (1 - st)`` succeeds.
    """
    p, q = _coerce(p), _coerce(q)
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    r = LaurentPoly._wrap(kernel.div_exact(p._terms, q._terms))
    for var in VARIABLES:
        if r and r.degree_range(var)[0] < min(0, p.degree_range(var)[0]):
            raise NotDivisible(f"quotient needs a negative power of {var} absent from the dividend")
    return r


def normalize_unit(p: PolyLike) -> LaurentPoly:
    """Canonical representative of ``p`` modulo units ``±s^a t^b``.

    Shifts so that the smallest s- and t-exponents are both zero, then fixes
    the sign so the smallest monomial has a positive coefficient.
    """
    p = _coerce(p)
    if not p:
        return ZERO
    exps = [kernel.unpack(k) for k in p._terms]
    shift = kernel.pack(0, -min(e[1] for e in exps), -min(e[2] for e in exps))
    sign = 1 if p._terms[min(p._terms)] > 0 else -1
    return LaurentPoly._wrap({k + shift: sign * c for k, c in p._terms.items()})


def eq_up_to_unit(p: PolyLike, q: PolyLike) -> bool:
    return normalize_unit(p) == normalize_unit(q)


# -- text form --------------------------------------------------------------


def _monomial_text(exps: Iterable[int]) -> str:
    parts = []
    for name, e in zip(VARIABLES, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def to_canonical_string(p: PolyLike) -> str:
    """Terms in ascending (G, s, t) lex order, e.g. ``'-1 + s^2*t^2 + G*t + G*s'``."""
    p = _coerce(p)
    if not p:
        return "0"
    out = []
    for k in sorted(p._terms):
        c = p._terms[k]
        mono = _monomial_text(kernel.unpack(k))
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(out)


def parse_poly(text: str) -> LaurentPoly:
    """Parse the text form written by :func:`to_canonical_string`.

    Terms are ``[integer][*]factor[*factor...]`` with factors ``G``, ``s``,
    ``t`` optionally raised to an integer power (``t^-2`` or ``t^(-2)``),
    joined by ``+``/``-``.  Whitespace is ignored.
    """
    pos = 0
    n = len(text)
    terms: dict = {}
    saw_term = False

    def skip_ws(i):
        while i < n and text[i].isspace():
            i += 1
        return i

    def read_int(i):
        i = skip_ws(i)
        sign = 1
        paren = False
        if i < n and text[i] == "(":
            paren = True
            i = skip_ws(i + 1)
        if i < n and text[i] in "+-":
            sign = -1 if text[i] == "-" else 1
            i = skip_ws(i + 1)
        j = i
        while j < n and text[j].isdigit():
            j += 1
        if j == i:
            raise ParseError("expected integer exponent", position=i)
        value = sign * int(text[i:j])
        j = skip_ws(j)
        if paren:
            if j >= n or text[j] != ")":
                raise ParseError("expected ')'", position=j)
            j += 1
        return value, j

    pos = skip_ws(pos)
    if pos == n:
        raise ParseError("empty polynomial", position=0)
    while True:
        pos = skip_ws(pos)
        sign = 1
        if pos < n and text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos = skip_ws(pos + 1)
        elif saw_term:
            raise ParseError("expected '+' or '-'", position=pos)
        coeff = None
        exps = [0, 0, 0]
        factors = 0
        while True:
            pos = skip_ws(pos)
            if factors and pos < n and text[pos] == "*":
                pos = skip_ws(pos + 1)
            elif factors and not (pos < n and text[pos] in "Gst"):
                break
            if pos < n and text[pos].isdigit():
                if coeff is not None or factors:
                    raise ParseError("integer must lead the term", position=pos)
                j = pos
                while j < n and text[j].isdigit():
                    j += 1
                coeff = int(text[pos:j])
                pos = j
            elif pos < n and text[pos] in "Gst":
                var = text[pos]
                pos = skip_ws(pos + 1)
                e = 1
                if pos < n and text[pos] == "^":
                    e, pos = read_int(pos + 1)
                exps[_VAR_INDEX[var]] += e
            else:
                raise ParseError("expected coefficient or variable", position=pos)
            factors += 1
        c = sign * (1 if coeff is None else coeff)
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + c
        saw_term = True
        pos = skip_ws(pos)
        if pos == n:
            break
    return LaurentPoly(terms)
