"""Exact complex numbers with rational real and imaginary parts."""

from fractions import Fraction
from numbers import Rational

from ..errors import DivisionByZero

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {x!r} to an exact rational")


class GaussianRational:
    """A number ``re + i*im`` with ``re, im`` arbitrary-precision rationals.

    Instances are immutable; ``Fraction`` keeps both parts reduced with a
    positive denominator.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            if im:
                raise TypeError("imaginary part given twice")
            re, im = re.re, re.im
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    @classmethod
    def _raw(cls, re, im):
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    @classmethod
    def coerce(cls, x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            raise TypeError("floating point complex values are not exact")
        return cls._raw(_frac(x), _ZERO)

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- predicates ---------------------------------------------------------
    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self):
        return not self.im

    def is_one(self):
        return self.re == 1 and not self.im

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return GaussianRational._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return GaussianRational._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational._raw(a * c, _ZERO)
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self):
        n = self.norm()
        if not n:
            raise DivisionByZero("division by zero Gaussian rational")
        return GaussianRational._raw(self.re / n, -self.im / n)

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        if not other.im:
            if not other.re:
                raise DivisionByZero("division by zero Gaussian rational")
            return GaussianRational._raw(self.re / other.re, self.im / other.re)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self):
        return GaussianRational._raw(self.re, -self.im)

    def norm(self):
        """``|q|^2`` as a ``Fraction``."""
        return self.re * self.re + self.im * self.im

    # -- comparison / hashing -------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- text -----------------------------------------------------------------
    def __repr__(self):
        return f"GaussianRational({str(self.re)!r}, {str(self.im)!r})"

    def __str__(self):
        return format_gaussian(self)


def format_gaussian(q):
    """Canonical text: ``3/2``, ``-i``, ``2/3*i``, ``(1+2*i)``."""
    if not q.im:
        return str(q.re)
    if not q.re:
        if q.im == 1:
            return "i"
        if q.im == -1:
            return "-i"
        return f"{q.im}*i"
    im = q.im
    if im == 1:
        ipart = "+i"
    elif im == -1:
        ipart = "-i"
    elif im > 0:
        ipart = f"+{im}*i"
    else:
        ipart = f"{im}*i"
    return f"({q.re}{ipart})"


ZERO = GaussianRational()
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
