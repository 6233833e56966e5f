"""Tiny dense matrices of Scalars (lists of lists)."""

from itertools import permutations

from ..exactfield import ONE, ZERO, Scalar


def mul(A, B):
    return [[sum((A[i][k] * B[k][j] for k in range(len(B)) if A[i][k] and B[k][j]), ZERO)
             for j in range(len(B[0]))] for i in range(len(A))]


def add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def scale(A, c):
    return [[a * c for a in row] for row in A]


def identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def adjoint(A, involution):
    """Conjugate transpose under a symbol involution."""
    return [[A[j][i].conjugate(involution) for j in range(len(A))] for i in range(len(A[0]))]


def _sign(p):
    s, seen = 1, set()
    for i in range(len(p)):
        if i in seen:
            continue
        j, k = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            k += 1
        s *= -1 if k % 2 == 0 else 1
    return s


def det(A):
    """Leibniz expansion; intended for the small sizes used here."""
    n = len(A)
    total = ZERO
    for p in permutations(range(n)):
        t = Scalar.coerce(_sign(p))
        for i in range(n):
            t = t * A[i][p[i]]
            if not t:
                break
        total = total + t
    return total


def adjugate(A):
    n = len(A)
    if n == 1:
        return [[ONE]]
    out = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[A[r][c] for c in range(n) if c != j] for r in range(n) if r != i]
            c = det(minor)
            out[j][i] = c if (i + j) % 2 == 0 else -c
    return out
