"""Pseudo-unitary bases adapted to an isotropic n-plane in C^{2n+1}."""

import random
from dataclasses import dataclass
from fractions import Fraction

from ..errors import DegenerateInput
from ..exactfield import GaussianRational
from ..exactfield.linalg import Eliminator
from ..liealg import Algebra, form

G0 = GaussianRational(0)
G1 = GaussianRational(1)


def h(n, u, v):
    """``u* JJ v``."""
    J = form(n)
    return sum((u[r].conjugate() * x * v[c] for (r, c), x in J.entries.items()), G0)


@dataclass(frozen=True)
class IsotropicPlane:
    n: int
    basis: tuple  # n column vectors of length 2n+1

    def __post_init__(self):
        vs = tuple(tuple(GaussianRational.coerce(x) for x in v) for v in self.basis)
        object.__setattr__(self, "basis", vs)
        if len(vs) != self.n or any(len(v) != 2 * self.n + 1 for v in vs):
            raise DegenerateInput("an isotropic plane needs n vectors in C^(2n+1)")


@dataclass(frozen=True)
class AdaptedBasis:
    v: tuple
    w: tuple
    w_mid: tuple
    norm: Fraction  # h(w_mid, w_mid) > 0, left unnormalised


def gram_conditions(n, ab):
    """Names of the Gram identities that fail (empty when all hold)."""
    bad = []
    for i in range(n):
        for j in range(n):
            if h(n, ab.v[i], ab.v[j]):
                bad.append(f"h(v{i + 1},v{j + 1})")
            if h(n, ab.v[i], ab.w[j]) != (G1 if i == j else G0):
                bad.append(f"h(v{i + 1},w{j + 1})")
            if h(n, ab.w[i], ab.w[j]):
                bad.append(f"h(w{i + 1},w{j + 1})")
        if h(n, ab.v[i], ab.w_mid) or h(n, ab.w[i], ab.w_mid):
            bad.append(f"w_mid not orthogonal to index {i + 1}")
    if h(n, ab.w_mid, ab.w_mid) != ab.norm or ab.norm <= 0:
        bad.append("norm")
    return bad


def adapted_basis(plane):
    """Complete ``v_1..v_n`` to a basis with the Gram matrix of ``JJ``.

    Solve ``h(v_i, w_j) = δ_ij``, correct ``w_j -> w_j - 1/2 sum_k v_k h(w_k, w_j)``
    so the ``w`` span an isotropic plane, then take ``w_mid`` orthogonal to all.
    """
    n, V = plane.n, plane.basis
    m = 2 * n + 1
    for i in range(n):
        for j in range(n):
            if h(n, V[i], V[j]):
                raise DegenerateInput("input plane is not isotropic")
    J = form(n)
    VJ = [[sum((V[i][r].conjugate() * J[r, c] for r in range(m)), G0) for c in range(m)] for i in range(n)]
    el = Eliminator(VJ, G0, G1)
    if el.rank < n:
        raise DegenerateInput("the vectors v_i are linearly dependent")
    W = []
    for j in range(n):
        sol = el.solve([G1 if i == j else G0 for i in range(n)], with_kernel=False)
        W.append(list(sol.particular))
    A = [[h(n, W[k], W[j]) for j in range(n)] for k in range(n)]
    W2 = []
    for j in range(n):
        w = list(W[j])
        for k in range(n):
            if A[k][j]:
                c = A[k][j] * Fraction(1, 2)
                w = [a - c * b for a, b in zip(w, V[k])]
        W2.append(tuple(w))
    rows = [[sum((u[r].conjugate() * J[r, c] for r in range(m)), G0) for c in range(m)] for u in list(V) + W2]
    ker = Eliminator(rows, G0, G1).kernel()
    if len(ker) != 1:
        raise DegenerateInput("orthogonal complement is not a line")
    w_mid = ker[0]
    norm = h(n, w_mid, w_mid)
    if norm.im or norm.re <= 0:
        raise DegenerateInput("complement line is not positive")
    return AdaptedBasis(tuple(V), tuple(W2), tuple(w_mid), norm.re)


def standard_plane(n):
    return IsotropicPlane(n, tuple(tuple(G1 if r == k else G0 for r in range(2 * n + 1)) for k in range(n)))


def _rand_gauss(rng, span=3):
    return GaussianRational(Fraction(rng.randint(-span, span), rng.randint(1, 3)), rng.randint(-span, span))


def random_plane(n, rng=None):
    """``exp(N)`` applied to the standard plane (``N`` in ``g_-``), then a random
    change of basis inside the plane."""
    rng = rng or random.Random()
    alg = Algebra(n)
    N = alg.minus_one([_rand_gauss(rng) for _ in range(n)])
    T = [[G0] * n for _ in range(n)]
    for k in range(n):
        T[k][k] = GaussianRational(0, rng.randint(-3, 3))
        for l in range(k + 1, n):
            T[k][l] = _rand_gauss(rng)
            T[l][k] = -T[k][l].conjugate()
    N = N + alg.minus_two(T)
    N2 = N.matmul(N)
    m = 2 * n + 1

    def expN(v):
        out = list(v)
        for (r, c), x in N.entries.items():
            out[r] = out[r] + x * v[c]
        for (r, c), x in N2.entries.items():
            out[r] = out[r] + x * v[c] * Fraction(1, 2)
        return out

    base = [expN(v) for v in standard_plane(n).basis]
    while True:
        g = [[_rand_gauss(rng) for _ in range(n)] for _ in range(n)]
        if Eliminator(g, G0, G1).rank == n:
            break
    vs = tuple(tuple(sum((g[k][j] * base[k][r] for k in range(n)), G0) for r in range(m)) for j in range(n))
    return IsotropicPlane(n, vs)
