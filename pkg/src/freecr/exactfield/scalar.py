"""Rational functions over the Gaussian rationals in canonical form.

A :class:`Scalar` is ``num/den`` with ``gcd(num, den) = 1`` and the leading
term of ``den`` (graded lex) having coefficient 1, so structural equality
is semantic equality.  Multivariate gcd is delegated to sympy's sparse
polynomial rings over ``QQ_I``; every other operation is native.
"""

from fractions import Fraction

from .gaussian import GaussianRational
from .poly import Poly, ONE_POLY, ZERO_POLY
from .symbols import CHART_INVOLUTION, symbol_key
from ..errors import DivisionByZero, UnknownSymbol


def _to_sympy(polys):
    from sympy.polys.domains import QQ_I
    from sympy.polys.rings import ring

    names = sorted(set().union(*(p.symbols() for p in polys)), key=symbol_key)
    R, *_ = ring(names, QQ_I)
    pos = {s: k for k, s in enumerate(names)}
    out = []
    for p in polys:
        d = {}
        for m, c in p.terms.items():
            e = [0] * len(names)
            for s, k in m:
                e[pos[s]] = k
            d[tuple(e)] = QQ_I(_mpq(c.re), _mpq(c.im))
        out.append(R(d))
    return names, out


def _mpq(f):
    from sympy.polys.domains import QQ

    return QQ(f.numerator, f.denominator)


def _from_sympy(names, p):
    terms = {}
    for e, c in p.terms():
        m = tuple((names[k], x) for k, x in enumerate(e) if x)
        terms[m] = GaussianRational._raw(
            Fraction(int(c.x.numerator), int(c.x.denominator)),
            Fraction(int(c.y.numerator), int(c.y.denominator)),
        )
    return Poly._wrap(terms)


def poly_gcd_cofactors(a, b):
    """Return ``(g, a/g, b/g)`` for nonconstant inputs."""
    names, (sa, sb) = _to_sympy([a, b])
    g = sa.gcd(sb)
    return (
        _from_sympy(names, g),
        _from_sympy(names, sa.exquo(g)),
        _from_sympy(names, sb.exquo(g)),
    )


def poly_exquo(a, b):
    """Exact polynomial division; raises ``ValueError`` when inexact."""
    if b.is_constant():
        return a.scale(b.constant_value().inverse())
    names, (sa, sb) = _to_sympy([a, b])
    from sympy.polys.polyerrors import ExactQuotientFailed

    try:
        return _from_sympy(names, sa.exquo(sb))
    except ExactQuotientFailed:
        raise ValueError("inexact polynomial division") from None


class Scalar:
    """Element of the fraction field of ``Q(i)[symbols]``, kept canonical."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=None):
        if not isinstance(num, Poly):
            num = Poly.constant(num)
        if den is None:
            den = ONE_POLY
        elif not isinstance(den, Poly):
            den = Poly.constant(den)
        n, d = _canonical(num, den)
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _wrap(cls, num, den=ONE_POLY):
        obj = object.__new__(cls)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def symbol(cls, name):
        return cls._wrap(Poly.symbol(name))

    @classmethod
    def coerce(cls, x):
        if isinstance(x, Scalar):
            return x
        if isinstance(x, Poly):
            return cls._wrap(x)
        return cls._wrap(Poly.constant(x))

    # -- predicates -----------------------------------------------------------
    def is_zero(self):
        return not self.num.terms

    def __bool__(self):
        return bool(self.num.terms)

    def is_polynomial(self):
        return self.den.is_one()

    def is_constant(self):
        return self.den.is_one() and self.num.is_constant()

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.constant_value()

    def symbols(self):
        return self.num.symbols() | self.den.symbols()

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        if not other.num.terms:
            return self
        if not self.num.terms:
            return other
        if self.den.is_one() and other.den.is_one():
            return Scalar._wrap(self.num + other.num)
        if self.den == other.den:
            return _make(self.num + other.num, self.den)
        return _make(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._wrap(-self.num, self.den)

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        if not self.num.terms or not other.num.terms:
            return ZERO
        if self.den.is_one() and other.den.is_one():
            return Scalar._wrap(self.num * other.num)
        if other.is_constant():
            return Scalar._wrap(self.num.scale(other.num.constant_value()), self.den)
        if self.is_constant():
            return Scalar._wrap(other.num.scale(self.num.constant_value()), other.den)
        return _make(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num.terms:
            raise DivisionByZero("division by the zero Scalar")
        return _make(self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        if not other.num.terms:
            raise DivisionByZero("division by the zero Scalar")
        if other.is_constant():
            return Scalar._wrap(self.num.scale(other.num.constant_value().inverse()), self.den)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return Scalar._wrap(self.num ** k, self.den ** k)

    def diff(self, name):
        """Formal partial derivative; conjugate symbols are independent."""
        dn = self.num.diff(name)
        if self.den.is_one():
            return Scalar._wrap(dn)
        dd = self.den.diff(name)
        if not dd.terms:
            return _make(dn, self.den)
        return _make(dn * self.den - self.num * dd, self.den * self.den)

    def conjugate(self, involution=CHART_INVOLUTION):
        num = self.num.conjugate(involution)
        if self.den.is_one():
            return Scalar._wrap(num)
        return _make(num, self.den.conjugate(involution))

    def evaluate(self, point):
        """Exact value at a point given as symbol -> number."""
        try:
            d = self.den.evaluate(point)
            n = self.num.evaluate(point)
        except KeyError as e:
            raise UnknownSymbol(f"no value for symbol {e.args[0]!r}") from None
        if not d:
            raise DivisionByZero(f"denominator of {self} vanishes at the point")
        return n / d

    def substitute(self, mapping):
        mapping = {k: Scalar.coerce(v) for k, v in mapping.items()}
        return _subst_poly(self.num, mapping) / _subst_poly(self.den, mapping)

    # -- comparison / text ----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.den.is_one() and self.num == other
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.num, self.den))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r})"


def _subst_poly(p, mapping):
    out = ZERO
    for m, c in p.terms.items():
        t = Scalar._wrap(Poly.constant(c))
        for s, e in m:
            t = t * (mapping[s] ** e if s in mapping else Scalar.symbol(s) ** e)
        out = out + t
    return out


def _normalize_den(num, den):
    _, lc = den.leading_term()
    if lc.is_one():
        return num, den
    inv = lc.inverse()
    return num.scale(inv), den.scale(inv)


def _canonical(num, den):
    if not den.terms:
        raise DivisionByZero("zero denominator")
    if not num.terms:
        return ZERO_POLY, ONE_POLY
    if den.is_constant():
        c = den.constant_value()
        return (num if c.is_one() else num.scale(c.inverse())), ONE_POLY
    if num.is_constant():
        return _normalize_den(num, den)
    _, num, den = poly_gcd_cofactors(num, den)
    if den.is_constant():
        return num.scale(den.constant_value().inverse()), ONE_POLY
    return _normalize_den(num, den)


def _make(num, den):
    n, d = _canonical(num, den)
    return Scalar._wrap(n, d)


def format_scalar(s):
    from .poly import format_poly

    if s.den.is_one():
        return format_poly(s.num)
    num = format_poly(s.num)
    if len(s.num.terms) > 1:
        num = f"({num})"
    den = format_poly(s.den)
    if len(s.den.terms) > 1 or not _is_simple_factor(s.den):
        den = f"({den})"
    return f"{num}/{den}"


def _is_simple_factor(p):
    (m, c), = p.terms.items()
    return c.is_one() and len(m) == 1 and m[0][1] == 1


ZERO = Scalar._wrap(ZERO_POLY)
ONE = Scalar._wrap(ONE_POLY)
I = Scalar._wrap(Poly.constant(GaussianRational(0, 1)))


def scalar(x):
    """Coerce ints, Fractions, Gaussian rationals, Polys or text to a Scalar."""
    if isinstance(x, str):
        from .grammar import parse_scalar

        return parse_scalar(x)
    return Scalar.coerce(x)


def symbol(name):
    return Scalar.symbol(name)
