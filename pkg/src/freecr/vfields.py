"""Formal vector fields on the standard chart, Lie brackets and CR frames."""

from dataclasses import dataclass, field
from functools import cached_property

from .errors import ChartMismatch, DegenerateFrame, DivisionByZero, UnknownSymbol, WrongDimension
from .exactfield import Chart, GaussianRational, Scalar, ZERO
from .exactfield.linalg import Eliminator
from .exactfield.scalar import ONE


class VectorField:
    """A derivation ``sum_a V^a d/da`` over a :class:`Chart`."""

    __slots__ = ("chart", "components")

    def __init__(self, chart, components=None):
        comps = {}
        for name, c in (components or {}).items():
            chart.index(name)
            c = Scalar.coerce(c)
            if c:
                comps[name] = c
        object.__setattr__(self, "chart", chart)
        object.__setattr__(self, "components", comps)

    @classmethod
    def _wrap(cls, chart, comps):
        obj = object.__new__(cls)
        object.__setattr__(obj, "chart", chart)
        object.__setattr__(obj, "components", comps)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("VectorField is immutable")

    @classmethod
    def coordinate(cls, chart, name, coefficient=ONE):
        return cls(chart, {name: coefficient})

    def __getitem__(self, name):
        return self.components.get(name, ZERO)

    def is_zero(self):
        return not self.components

    def __bool__(self):
        return bool(self.components)

    def _check(self, other):
        if not isinstance(other, VectorField):
            raise TypeError(f"expected a VectorField, got {type(other).__name__}")
        if other.chart != self.chart:
            raise ChartMismatch(f"fields live on charts n={self.chart.n} and n={other.chart.n}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.components)
        for a, c in other.components.items():
            v = out.get(a, ZERO) + c
            if v:
                out[a] = v
            else:
                out.pop(a, None)
        return VectorField._wrap(self.chart, out)

    def __neg__(self):
        return VectorField._wrap(self.chart, {a: -c for a, c in self.components.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        s = Scalar.coerce(s)
        if not s:
            return VectorField._wrap(self.chart, {})
        return VectorField._wrap(self.chart, {a: c * s for a, c in self.components.items()})

    def __rmul__(self, s):
        return self.scale(s)

    def apply(self, f):
        """The derivative ``V(f)`` of a Scalar."""
        f = Scalar.coerce(f)
        out = ZERO
        for a, c in self.components.items():
            d = f.diff(a)
            if d:
                out = out + c * d
        return out

    def conjugate(self):
        inv = self.chart.involution
        out = {}
        for a, c in self.components.items():
            b, sign = inv(a)
            cc = c.conjugate(inv)
            out[b] = cc if sign > 0 else -cc
        return VectorField._wrap(self.chart, out)

    def evaluate(self, point):
        """Component vector (chart order) at a full point symbol -> number."""
        vec = []
        for a in self.chart.symbols:
            c = self.components.get(a)
            vec.append(c.evaluate(point) if c is not None else GaussianRational())
        return vec

    def __eq__(self, other):
        if not isinstance(other, VectorField):
            return NotImplemented
        return self.chart == other.chart and self.components == other.components

    def __hash__(self):
        return hash((self.chart.n, frozenset(self.components.items())))

    def __repr__(self):
        return f"VectorField({format_field(self)})"


def format_field(V):
    if not V.components:
        return "0"
    order = V.chart.index
    return " + ".join(f"({c})*d/d{a}" for a, c in sorted(V.components.items(), key=lambda kv: order(kv[0])))


def bracket(V, W):
    """Lie bracket ``[V, W]^a = V(W^a) - W(V^a)``."""
    V._check(W)
    out = {}
    for a in set(V.components) | set(W.components):
        v = V.apply(W[a]) - W.apply(V[a])
        if v:
            out[a] = v
    return VectorField._wrap(V.chart, out)


class _NotInSpan:
    __slots__ = ()

    def __repr__(self):
        return "NOT_IN_SPAN"

    def __bool__(self):
        return False


NOT_IN_SPAN = _NotInSpan()


def full_point(chart, base_point=None):
    """Complete a base point to every chart symbol using the involution.

    Unset coordinates are 0.  Given ``z1 = a`` the partner ``zb1`` is
    ``conj(a)``; a diagonal ``w_kk`` must be purely imaginary.
    """
    inv = chart.involution
    point = {s: GaussianRational() for s in chart.symbols}
    given = {}
    for name, value in (base_point or {}).items():
        chart.index(name)
        given[name] = GaussianRational.coerce(value)
    for name, value in given.items():
        partner, sign = inv(name)
        want = value.conjugate() if sign > 0 else -value.conjugate()
        if partner in given and given[partner] != want:
            raise ValueError(f"base point values of {name} and {partner} are not conjugate")
        point[name] = value
        point[partner] = want
    return point


@dataclass(frozen=True, eq=False)
class CRFrame:
    """The fields ``X_i``, ``X_ib = conj(X_i)`` and ``X_{ij}b = -[X_i, X_jb]``.

    Slots are ordered holomorphic (``0..n-1``), antiholomorphic
    (``n..2n-1``), then Levi fields at ``2n + i*n + j``.
    """

    n: int
    chart: Chart
    holo: tuple
    antiholo: tuple
    levi: tuple
    base_point: dict = field(default_factory=dict)

    @property
    def dimension(self):
        return 2 * self.n + self.n * self.n

    def slot_holo(self, i):
        return i

    def slot_antiholo(self, i):
        return self.n + i

    def slot_levi(self, i, j):
        return 2 * self.n + i * self.n + j

    def slot_label(self, k):
        n = self.n
        if k < n:
            return str(k + 1)
        if k < 2 * n:
            return f"{k - n + 1}b"
        i, j = divmod(k - 2 * n, n)
        return f"[{i + 1}{j + 1}b]"

    @property
    def fields(self):
        return self.holo + self.antiholo + tuple(f for row in self.levi for f in row)

    @cached_property
    def _eliminator(self):
        M = [[f[a] for f in self.fields] for a in self.chart.symbols]
        return Eliminator(M, ZERO, ONE)

    def expand(self, V, slots=None):
        """Coefficients ``c`` with ``V = sum c_k F_k``, or ``NOT_IN_SPAN``.

        With ``slots`` given, ``V`` must lie in the span of those frame
        fields alone.
        """
        if V.chart != self.chart:
            raise ChartMismatch("field and frame live on different charts")
        el = self._eliminator
        sol = el.solve([V[a] for a in self.chart.symbols], with_kernel=False)
        if not sol:
            return NOT_IN_SPAN
        coeffs = sol.particular
        if slots is not None:
            allowed = set(slots)
            if any(c for k, c in enumerate(coeffs) if k not in allowed):
                return NOT_IN_SPAN
        return coeffs

    def recombine(self, coeffs):
        out = VectorField(self.chart)
        for c, f in zip(coeffs, self.fields):
            if c:
                out = out + f.scale(c)
        return out


def build_frame(fields, base_point=None):
    """Complete ``n`` fields spanning ``D^{1,0}`` to a full CR frame.

    Raises :class:`DegenerateFrame` unless the ``2n + n^2`` fields are
    independent at the base point (default: origin).
    """
    fields = tuple(fields)
    n = len(fields)
    if n < 2:
        raise WrongDimension("a CR frame needs at least two fields")
    chart = fields[0].chart
    for f in fields:
        if f.chart != chart:
            raise ChartMismatch("frame fields live on different charts")
    if chart.n != n:
        raise WrongDimension(f"{n} fields given for a chart of CR dimension {chart.n}")
    anti = tuple(f.conjugate() for f in fields)
    levi = tuple(tuple(-bracket(fields[i], anti[j]) for j in range(n)) for i in range(n))
    point = full_point(chart, base_point)
    frame = CRFrame(n, chart, fields, anti, levi, dict(base_point or {}))
    try:
        cols = [f.evaluate(point) for f in frame.fields]
    except (DivisionByZero, UnknownSymbol) as e:
        raise DegenerateFrame(f"frame is singular at the base point: {e}") from None
    rows = [list(r) for r in zip(*cols)]
    el = Eliminator(rows, GaussianRational(), GaussianRational(1))
    if el.rank < frame.dimension:
        raise DegenerateFrame(
            f"frame has rank {el.rank} < {frame.dimension} at the base point")
    return frame


def expand_in_frame(frame, V, slots=None):
    return frame.expand(V, slots)
