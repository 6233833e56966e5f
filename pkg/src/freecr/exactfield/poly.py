"""Sparse multivariate polynomials over the Gaussian rationals.

A monomial is a tuple of ``(symbol, exponent)`` pairs sorted by
:func:`symbol_key`; a polynomial maps monomials to nonzero coefficients.
"""

from fractions import Fraction
from functools import lru_cache

from .gaussian import GaussianRational, ONE as G_ONE, ZERO as G_ZERO
from .symbols import CHART_INVOLUTION, symbol_key


UNIT = ()


@lru_cache(maxsize=1 << 16)
def mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for s, e in b:
        d[s] = d.get(s, 0) + e
    return tuple(sorted(d.items(), key=lambda kv: symbol_key(kv[0])))


def mono_degree(m):
    return sum(e for _, e in m)


@lru_cache(maxsize=1 << 16)
def mono_order_key(m):
    """Graded lexicographic key; larger key means larger monomial."""
    return (mono_degree(m), tuple((_neg_key(s), e) for s, e in m))


class _Rev:
    __slots__ = ("k",)

    def __init__(self, k):
        self.k = k

    def __lt__(self, other):
        return self.k > other.k

    def __gt__(self, other):
        return self.k < other.k

    def __eq__(self, other):
        return self.k == other.k

    def __hash__(self):
        return hash(self.k)


@lru_cache(maxsize=None)
def _neg_key(s):
    return _Rev(symbol_key(s))


def format_monomial(m):
    parts = []
    for s, e in m:
        parts.append(s if e == 1 else f"{s}^{e}")
    return "*".join(parts)


class Poly:
    """Immutable sparse polynomial; equality is structural."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            terms = dict(terms)
        object.__setattr__(self, "terms", {m: c for m, c in terms.items() if c})
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _wrap(cls, terms):
        obj = object.__new__(cls)
        object.__setattr__(obj, "terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c):
        c = GaussianRational.coerce(c)
        return cls._wrap({UNIT: c} if c else {})

    @classmethod
    def symbol(cls, name):
        return cls._wrap({((name, 1),): G_ONE})

    # -- predicates -----------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        t = self.terms
        return not t or (len(t) == 1 and UNIT in t)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get(UNIT, G_ZERO)

    def is_one(self):
        t = self.terms
        return len(t) == 1 and UNIT in t and t[UNIT].is_one()

    def symbols(self):
        return {s for m in self.terms for s, _ in m}

    def degree(self):
        return max((mono_degree(m) for m in self.terms), default=-1)

    def leading_term(self):
        m = max(self.terms, key=mono_order_key)
        return m, self.terms[m]

    def sorted_terms(self):
        """Terms in decreasing graded-lexicographic order."""
        return sorted(self.terms.items(), key=lambda mc: mono_order_key(mc[0]), reverse=True)

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Poly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._wrap({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return Poly.constant(other) - self

    def scale(self, c):
        c = GaussianRational.coerce(c)
        if not c:
            return ZERO_POLY
        if c.is_one():
            return self
        return Poly._wrap({m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return ZERO_POLY
        if len(a) == 1 and UNIT in a:
            return other.scale(a[UNIT])
        if len(b) == 1 and UNIT in b:
            return self.scale(b[UNIT])
        out = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = mono_mul(ma, mb)
                c = ca * cb
                v = out.get(m)
                out[m] = c if v is None else v + c
        return Poly._wrap({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = ONE_POLY
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def diff(self, name):
        out = {}
        for m, c in self.terms.items():
            for pos, (s, e) in enumerate(m):
                if s == name:
                    nm = m[:pos] + ((s, e - 1),) + m[pos + 1:] if e > 1 else m[:pos] + m[pos + 1:]
                    out[nm] = c * e
                    break
        return Poly._wrap(out)

    def conjugate(self, involution=CHART_INVOLUTION):
        out = {}
        for m, c in self.terms.items():
            sign = 1
            d = []
            for s, e in m:
                s2, sg = involution(s)
                if sg < 0 and e % 2:
                    sign = -sign
                d.append((s2, e))
            nm = tuple(sorted(d, key=lambda kv: symbol_key(kv[0])))
            cc = c.conjugate()
            out[nm] = cc if sign > 0 else -cc
        return Poly._wrap(out)

    def evaluate(self, point):
        """Value at ``point`` (symbol -> number); missing symbols raise KeyError."""
        total = G_ZERO
        for m, c in self.terms.items():
            v = c
            for s, e in m:
                v = v * GaussianRational.coerce(point[s]) ** e
            total = total + v
        return total

    def substitute(self, mapping):
        """Replace symbols by polynomials; unmapped symbols are kept."""
        out = ZERO_POLY
        cache = {}
        for m, c in self.terms.items():
            term = Poly.constant(c)
            kept = []
            for s, e in m:
                if s in mapping:
                    key = (s, e)
                    if key not in cache:
                        cache[key] = mapping[s] ** e
                    term = term * cache[key]
                else:
                    kept.append((s, e))
            if kept:
                term = term * Poly._wrap({tuple(kept): G_ONE})
            out = out + term
        return out

    def content_denominator(self):
        """Least common multiple of all coefficient denominators."""
        from math import lcm

        d = 1
        for c in self.terms.values():
            d = lcm(d, c.re.denominator, c.im.denominator)
        return d

    # -- comparison / text ------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self.terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _format_term(m, c, first):
    """Return (sign, body) with sign '+' or '-'."""
    if not c.im:
        sign = "-" if c.re < 0 else "+"
        mag = abs(c.re)
        if not m:
            return sign, str(mag)
        body = format_monomial(m)
        return sign, body if mag == 1 else f"{mag}*{body}"
    if not c.re:
        sign = "-" if c.im < 0 else "+"
        mag = abs(c.im)
        coef = "i" if mag == 1 else f"{mag}*i"
        return sign, coef if not m else f"{coef}*{format_monomial(m)}"
    coef = f"({c.re}{'+' if c.im > 0 else '-'}{'' if abs(c.im) == 1 else str(abs(c.im)) + '*'}i)"
    return "+", coef if not m else f"{coef}*{format_monomial(m)}"


def format_poly(p):
    if not p.terms:
        return "0"
    out = []
    for k, (m, c) in enumerate(p.sorted_terms()):
        sign, body = _format_term(m, c, k == 0)
        if k == 0:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


ZERO_POLY = Poly()
ONE_POLY = Poly.constant(1)
