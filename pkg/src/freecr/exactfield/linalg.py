"""Exact linear algebra over a field of exact elements.

Works for any element type with ``+ - * /`` and truthiness meaning
"nonzero": :class:`Scalar`, :class:`GaussianRational`, ``Fraction``.
Elimination is Gauss-Jordan with pivots chosen to keep rational-function
growth small (constants first, then the sparsest entry).
"""

from dataclasses import dataclass


def _cost(x):
    num = getattr(x, "num", None)
    if num is None:
        return 0
    if x.den.is_one() and num.is_constant():
        return 0
    return len(num.terms) + 2 * len(x.den.terms)


class _NoSolution:
    __slots__ = ()

    def __repr__(self):
        return "NO_SOLUTION"

    def __bool__(self):
        return False


NO_SOLUTION = _NoSolution()


@dataclass(frozen=True)
class Solution:
    """One particular solution plus a basis of the homogeneous solutions."""

    particular: tuple
    kernel: tuple


class Eliminator:
    """Row-reduce ``M`` once, then solve ``M x = b`` for many right-hand sides."""

    def __init__(self, M, zero, one):
        self.zero, self.one = zero, one
        self.rows = len(M)
        self.cols = len(M[0]) if M else 0
        A = [list(r) for r in M]
        T = [[one if i == j else zero for j in range(self.rows)] for i in range(self.rows)]
        pivots = []
        r = 0
        for c in range(self.cols):
            if r == self.rows:
                break
            cands = [k for k in range(r, self.rows) if A[k][c]]
            if not cands:
                continue
            p = min(cands, key=lambda k: (_cost(A[k][c]), k))
            A[r], A[p] = A[p], A[r]
            T[r], T[p] = T[p], T[r]
            inv = one / A[r][c]
            if _cost(inv) or inv != one:
                A[r] = [x * inv if x else x for x in A[r]]
                T[r] = [x * inv if x else x for x in T[r]]
            for k in range(self.rows):
                if k == r:
                    continue
                f = A[k][c]
                if not f:
                    continue
                A[k] = [a - f * b if b else a for a, b in zip(A[k], A[r])]
                T[k] = [a - f * b if b else a for a, b in zip(T[k], T[r])]
            pivots.append(c)
            r += 1
        self.reduced = A
        self.transform = T
        self.pivots = tuple(pivots)
        self.rank = len(pivots)

    def kernel(self):
        free = [c for c in range(self.cols) if c not in self.pivots]
        basis = []
        for fc in free:
            v = [self.zero] * self.cols
            v[fc] = self.one
            for k, pc in enumerate(self.pivots):
                x = self.reduced[k][fc]
                if x:
                    v[pc] = -x
            basis.append(tuple(v))
        return tuple(basis)

    def apply_transform(self, b):
        out = []
        for row in self.transform:
            acc = self.zero
            for t, x in zip(row, b):
                if t and x:
                    acc = acc + t * x
            out.append(acc)
        return out

    def solve(self, b, with_kernel=True):
        """Return a :class:`Solution` or ``NO_SOLUTION``."""
        if len(b) != self.rows:
            raise ValueError("right-hand side has the wrong length")
        tb = self.apply_transform(b)
        if any(tb[k] for k in range(self.rank, self.rows)):
            return NO_SOLUTION
        x = [self.zero] * self.cols
        for k, pc in enumerate(self.pivots):
            x[pc] = tb[k]
        return Solution(tuple(x), self.kernel() if with_kernel else ())


def _field_identities(M, rhs=()):
    from fractions import Fraction

    from .gaussian import GaussianRational
    from .scalar import Scalar

    kinds = {type(x) for row in list(M) + [list(rhs)] for x in row}
    for t in (Scalar, GaussianRational):
        if t in kinds:
            return t.coerce(0), t.coerce(1)
    return Fraction(0), Fraction(1)


def solve_linear(M, rhs):
    """Solve ``M x = rhs`` exactly.

    Returns a :class:`Solution` (particular solution and kernel basis) or
    the value ``NO_SOLUTION`` when the system is inconsistent.
    """
    zero, one = _field_identities(M, rhs)
    M = [[zero + x for x in row] for row in M]
    rhs = [zero + x for x in rhs]
    return Eliminator(M, zero, one).solve(rhs)


def rank(M):
    if not M:
        return 0
    zero, one = _field_identities(M)
    M = [[zero + x for x in row] for row in M]
    return Eliminator(M, zero, one).rank


def kernel(M):
    zero, one = _field_identities(M)
    M = [[zero + x for x in row] for row in M]
    return Eliminator(M, zero, one).kernel()


def mat_vec(M, v, zero):
    out = []
    for row in M:
        acc = zero
        for a, x in zip(row, v):
            if a and x:
                acc = acc + a * x
        out.append(acc)
    return out
