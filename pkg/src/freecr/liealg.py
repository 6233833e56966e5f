"""Exact matrix model of su(n+1, n) with its |2|-grading.

Matrices are ``(2n+1) x (2n+1)`` in blocks of sizes ``n, 1, n``; the form is
``JJ = [[0, 0, I], [0, 1, 0], [I, 0, 0]]`` and the algebra is
``{M : M* JJ + JJ M = 0, tr M = 0}``.  The grade of block ``(row, col)`` is
``col - row``, so the lower-left block is ``g_-2``.

Parameters: a ``g_-1`` element is the row vector ``X`` sitting in block
``(1, 0)``; a ``g_-2`` element is the skew-Hermitian ``T`` with block
``(2, 0)`` equal to ``-T``.  With these choices the bracket of two ``g_-1``
elements is ``X* Y - Y* X`` on the nose.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import isqrt
from itertools import product

from .exactfield import GaussianRational
from .exactfield.linalg import Eliminator

G0 = GaussianRational(0)
G1 = GaussianRational(1)
GI = GaussianRational(0, 1)
GRADES = (-2, -1, 0, 1, 2)


def _block(n, k):
    return 0 if k < n else (1 if k == n else 2)


class AlgebraElement:
    """Sparse exact matrix; ``entries`` maps ``(row, col)`` to nonzero values."""

    __slots__ = ("n", "entries", "_hash")

    def __init__(self, n, entries=None):
        object.__setattr__(self, "n", n)
        clean = {}
        for k, v in (entries or {}).items():
            v = GaussianRational.coerce(v)
            if v:
                clean[k] = v
        object.__setattr__(self, "entries", clean)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _wrap(cls, n, entries):
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "entries", entries)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    @property
    def size(self):
        return 2 * self.n + 1

    @classmethod
    def from_dense(cls, rows):
        n = (len(rows) - 1) // 2
        return cls(n, {(r, c): v for r, row in enumerate(rows) for c, v in enumerate(row)})

    def dense(self):
        m = self.size
        out = [[G0] * m for _ in range(m)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def __getitem__(self, rc):
        return self.entries.get(rc, G0)

    def __bool__(self):
        return bool(self.entries)

    def __add__(self, other):
        out = dict(self.entries)
        for k, v in other.entries.items():
            w = out.get(k, G0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return AlgebraElement._wrap(self.n, out)

    def __neg__(self):
        return AlgebraElement._wrap(self.n, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = GaussianRational.coerce(c)
        if not c:
            return AlgebraElement._wrap(self.n, {})
        return AlgebraElement._wrap(self.n, {k: v * c for k, v in self.entries.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def matmul(self, other):
        rows = {}
        for (r, k), v in self.entries.items():
            rows.setdefault(k, []).append((r, v))
        out = {}
        for (k, c), w in other.entries.items():
            for r, v in rows.get(k, ()):
                out[r, c] = out.get((r, c), G0) + v * w
        return AlgebraElement._wrap(self.n, {k: v for k, v in out.items() if v})

    def adjoint(self):
        """Conjugate transpose."""
        return AlgebraElement._wrap(self.n, {(c, r): v.conjugate() for (r, c), v in self.entries.items()})

    def trace(self):
        return sum((v for (r, c), v in self.entries.items() if r == c), G0)

    def grade_of(self, rc):
        r, c = rc
        return _block(self.n, c) - _block(self.n, r)

    def component(self, grade):
        return AlgebraElement._wrap(self.n, {k: v for k, v in self.entries.items() if self.grade_of(k) == grade})

    def grades(self):
        return {self.grade_of(k) for k in self.entries}

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.n, frozenset(self.entries.items()))))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in sorted(self.entries.items()))
        return f"AlgebraElement(n={self.n}, {{{body}}})"


def commutator(x, y):
    return x.matmul(y) - y.matmul(x)


@lru_cache(maxsize=None)
def form(n):
    """The defining Hermitian form ``JJ``."""
    e = {(n, n): G1}
    for k in range(n):
        e[k, n + 1 + k] = G1
        e[n + 1 + k, k] = G1
    return AlgebraElement(n, e)


def in_algebra(x):
    """``M* JJ + JJ M = 0`` and ``tr M = 0``."""
    J = form(x.n)
    return not (x.adjoint().matmul(J) + J.matmul(x)) and not x.trace()


@dataclass(frozen=True)
class BasisElement:
    name: str
    grade: int
    matrix: AlgebraElement
    key: tuple  # ((row, col), part) read off to get this coordinate


@dataclass(frozen=True)
class GradedDecomposition:
    parts: dict  # grade -> AlgebraElement

    def total(self):
        it = iter(self.parts.values())
        out = next(it)
        for p in it:
            out = out + p
        return out


def decompose(x):
    return GradedDecomposition({g: x.component(g) for g in GRADES})


def _hermitian_pair_basis(n, row0, col0, grade, label):
    """Real basis of the skew-Hermitian n x n block at ``(row0, col0)``."""
    out = []
    for k in range(n):
        for l in range(k, n):
            if k == l:
                out.append(BasisElement(f"{label}:im[{k + 1}{k + 1}]", grade,
                                        AlgebraElement(n, {(row0 + k, col0 + k): GI}), ((row0 + k, col0 + k), "im")))
                continue
            out.append(BasisElement(f"{label}:re[{k + 1}{l + 1}]", grade,
                                    AlgebraElement(n, {(row0 + k, col0 + l): G1, (row0 + l, col0 + k): -G1}),
                                    ((row0 + k, col0 + l), "re")))
            out.append(BasisElement(f"{label}:im[{k + 1}{l + 1}]", grade,
                                    AlgebraElement(n, {(row0 + k, col0 + l): GI, (row0 + l, col0 + k): GI}),
                                    ((row0 + k, col0 + l), "im")))
    return out


def _vector_basis(n, grade, label, at, mirror):
    out = []
    for a in range(n):
        for part, z in (("re", G1), ("im", GI)):
            e = {at(a): z, mirror(a): -z.conjugate()}
            out.append(BasisElement(f"{label}:{part}[{a + 1}]", grade, AlgebraElement(n, e), (at(a), part)))
    return out


def _g0_basis(n):
    out = []
    for a, b in product(range(n), repeat=2):
        for part, z in (("re", G1), ("im", GI)):
            e = {(a, b): z, (n + 1 + b, n + 1 + a): -z.conjugate()}
            if a == b and part == "im":
                e[n, n] = GaussianRational(0, -2)
            out.append(BasisElement(f"g0:{part}[{a + 1}{b + 1}]", 0, AlgebraElement(n, e), ((a, b), part)))
    return out


@dataclass(frozen=True)
class Algebra:
    """A real basis of su(n+1, n) organised by grade."""

    n: int
    basis: tuple = field(init=False, compare=False)

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise ValueError("n must be positive")
        b = []
        b += _hermitian_pair_basis(n, n + 1, 0, -2, "g-2")
        b += _vector_basis(n, -1, "g-1", lambda a: (n, a), lambda a: (n + 1 + a, n))
        b += _g0_basis(n)
        b += _vector_basis(n, 1, "g1", lambda a: (a, n), lambda a: (n, n + 1 + a))
        b += _hermitian_pair_basis(n, 0, n + 1, 2, "g2")
        object.__setattr__(self, "basis", tuple(b))

    @property
    def dimension(self):
        return len(self.basis)

    def by_grade(self, grade):
        return [k for k, e in enumerate(self.basis) if e.grade == grade]

    def grade_dimensions(self):
        return {g: len(self.by_grade(g)) for g in GRADES}

    def coordinates(self, x):
        """Real coordinates of ``x``; raises ``ValueError`` if ``x`` is not in the algebra."""
        coords = []
        for e in self.basis:
            rc, part = e.key
            v = x[rc]
            coords.append(v.re if part == "re" else v.im)
        if self.combine(coords) != x:
            raise ValueError("matrix is not an element of su(n+1, n)")
        return coords

    def combine(self, coords):
        out = AlgebraElement(self.n)
        for c, e in zip(coords, self.basis):
            if c:
                out = out + e.matrix.scale(c)
        return out

    def element(self, k):
        return self.basis[k].matrix

    # -- parameters ---------------------------------------------------------
    def minus_one(self, X):
        """The ``g_-1`` element with row-vector parameter ``X``."""
        n = self.n
        e = {}
        for a, x in enumerate(X):
            x = GaussianRational.coerce(x)
            e[n, a] = x
            e[n + 1 + a, n] = -x.conjugate()
        return AlgebraElement(n, e)

    def minus_two(self, T):
        """The ``g_-2`` element with skew-Hermitian parameter ``T``."""
        n = self.n
        return AlgebraElement(n, {(n + 1 + k, l): -GaussianRational.coerce(T[k][l])
                                  for k in range(n) for l in range(n)})

    def minus_two_parameter(self, x):
        n = self.n
        return [[-x[n + 1 + k, l] for l in range(n)] for k in range(n)]

    def minus_one_parameter(self, x):
        return [x[self.n, a] for a in range(self.n)]

    @cached_property
    def dual_basis(self):
        """``p_+`` basis indices and, for each ``g_-`` index, its trace-form dual.

        Returns ``(minus, plus, dual)`` with ``dual[a]`` the coordinates (over
        ``plus``) of the element ``Z^a`` satisfying ``tr(Z^a e_b) = δ_ab``.
        """
        minus = self.by_grade(-2) + self.by_grade(-1)
        plus = self.by_grade(1) + self.by_grade(2)
        gram = [[_trace_pair(self.element(p), self.element(m)) for p in plus] for m in minus]
        el = Eliminator(gram, Fraction(0), Fraction(1))
        if el.rank != len(minus):
            raise ArithmeticError("trace form does not pair p_+ with g_- nondegenerately")
        dual = {}
        for k, m in enumerate(minus):
            rhs = [Fraction(int(j == k)) for j in range(len(minus))]
            dual[m] = el.solve(rhs, with_kernel=False).particular
        return minus, plus, dual

    def dual_element(self, a):
        minus, plus, dual = self.dual_basis
        out = AlgebraElement(self.n)
        for c, p in zip(dual[a], plus):
            if c:
                out = out + self.element(p).scale(c)
        return out


def _trace_pair(x, y):
    t = x.matmul(y).trace()
    if t.im:
        raise ArithmeticError("trace form is not real")
    return t.re


def bracket_algebra(x, y):
    """Commutator with its graded components."""
    z = commutator(x, y)
    return z, decompose(z)


def g_minus_one_bracket(X, Y):
    """The ``g_-2`` parameter of ``[X, Y]`` for row vectors: ``X* Y - Y* X``."""
    n = len(X)
    X = [GaussianRational.coerce(v) for v in X]
    Y = [GaussianRational.coerce(v) for v in Y]
    return [[X[k].conjugate() * Y[l] - Y[k].conjugate() * X[l] for l in range(n)] for k in range(n)]


# -- cochains ---------------------------------------------------------------------


@dataclass(frozen=True)
class Cochain2:
    """An element of ``Λ² p_+ ⊗ g``: ``values[(a, b)]`` (``a < b`` over ``g_-``
    basis indices) is the coefficient of ``Z^a ∧ Z^b``."""

    algebra: Algebra
    values: dict

    @classmethod
    def from_bilinear(cls, algebra, kappa, args=None):
        """``sum_{a<b} Z^a ∧ Z^b ⊗ kappa(e_a, e_b)`` over ``g_-`` basis pairs."""
        minus = args if args is not None else algebra.dual_basis[0]
        vals = {}
        for i, a in enumerate(minus):
            for b in minus[i + 1:]:
                v = kappa(algebra.element(a), algebra.element(b))
                if v:
                    vals[min(a, b), max(a, b)] = v
        return cls(algebra, vals)

    def __call__(self, a, b):
        if a == b:
            return AlgebraElement(self.algebra.n)
        if a < b:
            return self.values.get((a, b), AlgebraElement(self.algebra.n))
        return -self.values.get((b, a), AlgebraElement(self.algebra.n))

    def is_zero(self):
        return not any(self.values.values())


def _plus_coords(algebra, z):
    """Expand ``z`` in the dual elements ``Z^a``: ``z = sum c_a Z^a``."""
    return _inverse_dual(algebra)(algebra.coordinates(z))


@lru_cache(maxsize=None)
def _inverse_dual(algebra):
    minus, plus, dual = algebra.dual_basis
    M = [[dual[a][j] for a in minus] for j in range(len(plus))]
    el = Eliminator(M, Fraction(0), Fraction(1))
    plus_set = set(plus)

    def solve(coords):
        rhs = [coords[p] for p in plus]
        if any(coords[k] for k in range(len(coords)) if k not in plus_set):
            raise ValueError("element is not in p_+")
        sol = el.solve(rhs, with_kernel=False)
        return dict(zip(minus, sol.particular))

    return solve


def codifferential(phi):
    """``∂*(Z0 ∧ Z1 ⊗ X) = -Z0 ⊗ [Z1, X] + Z1 ⊗ [Z0, X] - [Z0, Z1] ⊗ X``.

    The 1-cochain is returned as ``{a: Y}`` meaning ``sum_a Z^a ⊗ Y``.
    """
    alg = phi.algebra
    out = {}

    def add(a, y):
        if y:
            out[a] = out[a] + y if a in out else y

    for (a, b), X in phi.values.items():
        Za, Zb = alg.dual_element(a), alg.dual_element(b)
        add(a, -commutator(Zb, X))
        add(b, commutator(Za, X))
        for c, k in _plus_coords(alg, commutator(Za, Zb)).items():
            if k:
                add(c, -X.scale(k))
    return {a: y for a, y in sorted(out.items()) if y}


def act_cochain2(A, phi):
    """Adjoint action of ``A`` (grade 0) on a 2-cochain."""
    alg = phi.algebra
    out = {}

    def add(a, b, y):
        if a == b or not y:
            return
        if a > b:
            a, b, y = b, a, -y
        out[a, b] = out[a, b] + y if (a, b) in out else y

    for (a, b), X in phi.values.items():
        add(a, b, commutator(A, X))
        for c, k in _plus_coords(alg, commutator(A, alg.dual_element(a))).items():
            if k:
                add(c, b, X.scale(k))
        for c, k in _plus_coords(alg, commutator(A, alg.dual_element(b))).items():
            if k:
                add(a, c, X.scale(k))
    return Cochain2(alg, {k: v for k, v in out.items() if v})


def act_cochain1(A, psi, algebra):
    out = {}

    def add(a, y):
        if y:
            out[a] = out[a] + y if a in out else y

    for a, X in psi.items():
        add(a, commutator(A, X))
        for c, k in _plus_coords(algebra, commutator(A, algebra.dual_element(a))).items():
            if k:
                add(c, X.scale(k))
    return {a: y for a, y in sorted(out.items()) if y}


def kappa11_project(phi):
    """Keep only the components with both arguments in ``g_-1``."""
    minus_one = set(phi.algebra.by_grade(-1))
    return Cochain2(phi.algebra, {k: v for k, v in phi.values.items() if k[0] in minus_one and k[1] in minus_one})


# -- rigidity of g0 -----------------------------------------------------------------------


def _real_coords(vec):
    out = []
    for z in vec:
        z = GaussianRational.coerce(z)
        out += [z.re, z.im]
    return out


def levi_forms(n):
    """The ``n^2`` real skew forms on ``g_-1 = R^{2n}`` given by the bracket."""
    m = 2 * n
    units = []
    for a in range(n):
        units.append([G1 if k == a else G0 for k in range(n)])
        units.append([GI if k == a else G0 for k in range(n)])
    brackets = [[g_minus_one_bracket(u, v) for v in units] for u in units]
    forms = []
    for k in range(n):
        for l in range(k, n):
            parts = ("im",) if k == l else ("re", "im")
            for part in parts:
                forms.append([[getattr(brackets[p][q][k][l], part) for q in range(m)] for p in range(m)])
    return forms


def complex_structure(n):
    """Multiplication by ``i`` on ``C^n = R^{2n}`` (coordinates re, im interleaved)."""
    m = 2 * n
    J = [[Fraction(0)] * m for _ in range(m)]
    for a in range(n):
        J[2 * a + 1][2 * a] = Fraction(1)
        J[2 * a][2 * a + 1] = Fraction(-1)
    return J


def _matmul(A, B):
    return [[sum((A[i][k] * B[k][j] for k in range(len(B))), Fraction(0)) for j in range(len(B[0]))]
            for i in range(len(A))]


def _transpose(A):
    return [list(r) for r in zip(*A)]


@dataclass(frozen=True)
class RigidityRecord:
    n: int
    kernel_dimension: int
    kernel_basis: tuple  # matrices spanning the solution space
    spans_id_and_J: bool
    complex_structures: tuple  # real (a, b) with (a Id + b J)^2 = -Id
    skew_adjoint_dimension: int  # solutions of "A^T Ω symmetric for all Ω"
    forms_totally_real: bool

    @property
    def ok(self):
        return (self.kernel_dimension == 2 and self.spans_id_and_J
                and sorted(self.complex_structures) == [(0, -1), (0, 1)] and self.forms_totally_real)


def rigidity_check(n):
    """Brute-force the endomorphisms of ``g_-1`` compatible with the Levi forms.

    Unknowns: a real ``2n x 2n`` matrix ``A`` and, per form ``Ω``, reals
    ``α, β`` with ``A^T Ω = α Ω + β J^T Ω``.  The projection of the solution
    space to ``A`` is computed exactly and compared with ``span{Id, J}``.
    The complex structures inside that span are the real solutions of
    ``(a + b J)^2 = -1``.
    """
    m = 2 * n
    forms = levi_forms(n)
    J = complex_structure(n)
    JT = _transpose(J)
    nA = m * m
    nunk = nA + 2 * len(forms)
    rows = []
    for f, Om in enumerate(forms):
        JTO = _matmul(JT, Om)
        for p, q in product(range(m), repeat=2):
            row = [Fraction(0)] * nunk
            # (A^T Ω)_{pq} = sum_k A_{kp} Ω_{kq}
            for k in range(m):
                if Om[k][q]:
                    row[k * m + p] += Om[k][q]
            row[nA + 2 * f] -= Om[p][q]
            row[nA + 2 * f + 1] -= JTO[p][q]
            rows.append(row)
    ker = Eliminator(rows, Fraction(0), Fraction(1)).kernel()
    proj = [v[:nA] for v in ker]
    el = Eliminator(proj, Fraction(0), Fraction(1)) if proj else None
    dim = el.rank if el else 0
    basis = tuple(tuple(tuple(el.reduced[k][i * m:(i + 1) * m]) for i in range(m)) for k in range(dim)) if el else ()
    ident = [Fraction(int(i == j)) for i in range(m) for j in range(m)]
    flatJ = [x for row in J for x in row]
    spans = dim == 2 and _rank_of([ident, flatJ] + [list(sum(b, ())) for b in basis]) == 2
    roots = _complex_structures_in_span(J) if spans else []
    skew_rows = []
    for Om in forms:
        for p, q in product(range(m), repeat=2):
            if p >= q:
                continue
            row = [Fraction(0)] * nA
            for k in range(m):
                row[k * m + p] += Om[k][q]
                row[k * m + q] -= Om[k][p]
            skew_rows.append(row)
    skew_dim = nA - Eliminator(skew_rows, Fraction(0), Fraction(1)).rank
    totally_real = all(_matmul(_matmul(JT, Om), J) == Om for Om in forms)
    return RigidityRecord(n, dim, basis, spans, tuple(roots), skew_dim, totally_real)


def _rational_sqrt(q):
    """Nonnegative rational square root of ``q``, or None."""
    if q < 0:
        return None
    num, den = isqrt(q.numerator), isqrt(q.denominator)
    return Fraction(num, den) if num * num == q.numerator and den * den == q.denominator else None


def _complex_structures_in_span(J):
    """All real ``(a, b)`` with ``(a Id + b J)^2 = -Id``.

    With ``J^2 = c Id`` (read off the matrix) the square is
    ``(a^2 + c b^2) Id + 2ab J``; as ``Id, J`` are independent this needs
    ``ab = 0`` and ``a^2 + c b^2 = -1``.  Each root is re-checked by squaring.
    """
    m = len(J)
    J2 = _matmul(J, J)
    c = J2[0][0]
    if J2 != [[c if i == j else Fraction(0) for j in range(m)] for i in range(m)]:
        raise ValueError("J^2 is not a multiple of the identity")
    cands = set()
    b = _rational_sqrt(Fraction(-1) / c) if c else None  # a = 0
    if b is not None:
        cands |= {(Fraction(0), b), (Fraction(0), -b)}
    a = _rational_sqrt(Fraction(-1))  # b = 0: never real
    if a is not None:
        cands |= {(a, Fraction(0)), (-a, Fraction(0))}
    out = []
    for a, b in sorted(cands):
        M = [[a * (i == j) + b * J[i][j] for j in range(m)] for i in range(m)]
        if _matmul(M, M) == [[Fraction(-(i == j)) for j in range(m)] for i in range(m)]:
            out.append((a, b))
    return out


def _rank_of(vectors):
    return Eliminator(vectors, Fraction(0), Fraction(1)).rank


# -- verification suite --------------------------------------------------------------


def check_grading(alg, pairs=None):
    """Every basis commutator ``[g_i, g_j]`` lands in ``g_{i+j}``; returns failures."""
    bad = []
    B = alg.basis
    it = pairs if pairs is not None else product(range(len(B)), repeat=2)
    for a, b in it:
        z = commutator(B[a].matrix, B[b].matrix)
        target = B[a].grade + B[b].grade
        if z and (z.grades() != {target} or not in_algebra(z)):
            bad.append((a, b))
    return bad


def check_jacobi(alg, triples=None):
    B = [e.matrix for e in alg.basis]
    if triples is None:
        triples = product(range(len(B)), repeat=3)
    cache = {}

    def br(a, b):
        if (a, b) not in cache:
            cache[a, b] = commutator(B[a], B[b])
        return cache[a, b]

    bad = []
    for a, b, c in triples:
        s = commutator(B[a], br(b, c)) + commutator(B[b], br(c, a)) + commutator(B[c], br(a, b))
        if s:
            bad.append((a, b, c))
    return bad


def check_minus_one_bracket(alg):
    bad = []
    idx = alg.by_grade(-1)
    for a, b in product(idx, repeat=2):
        x, y = alg.element(a), alg.element(b)
        X, Y = alg.minus_one_parameter(x), alg.minus_one_parameter(y)
        z = commutator(x, y)
        if z != alg.minus_two(g_minus_one_bracket(X, Y)):
            bad.append((a, b))
    return bad


def pairing_nondegenerate(alg):
    g1, gm1 = alg.by_grade(1), alg.by_grade(-1)
    gram = [[_trace_pair(alg.element(p), alg.element(m)) for p in g1] for m in gm1]
    return Eliminator(gram, Fraction(0), Fraction(1)).rank == len(g1)


def centre_check(alg):
    """Block-scalar ``g_0`` elements acting trivially on ``g_-``.

    The block-scalar family ``diag(aI, -2i Im(na), -conj(a) I)`` is real
    two-dimensional; returns ``(family_dimension, trivial_dimension)``.
    """
    n = alg.n
    family = []
    for z in (G1, GI):
        e = {(k, k): z for k in range(n)}
        e.update({(n + 1 + k, n + 1 + k): -z.conjugate() for k in range(n)})
        e[n, n] = GaussianRational(0, -2 * n * z.im)
        family.append(AlgebraElement(n, e))
    minus = alg.by_grade(-1) + alg.by_grade(-2)
    rows = []
    for m in minus:
        cols = [alg.coordinates(commutator(f, alg.element(m))) for f in family]
        rows += [list(r) for r in zip(*cols)]
    r = Eliminator(rows, Fraction(0), Fraction(1)).rank
    return len(family), len(family) - r
