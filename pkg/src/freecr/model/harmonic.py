"""The invariant P as a curvature 2-cochain of type Hom(g_-1 ⊗ g_-2, g_-2)."""

from itertools import product

from ..errors import UnsupportedDimension
from ..exactfield import GaussianRational, Scalar
from ..liealg import Algebra, Cochain2, codifferential, kappa11_project

G0 = GaussianRational(0)


def _constant(v):
    v = Scalar.coerce(v)
    if not v.is_constant():
        raise ValueError("P must have constant entries to become an algebraic cochain")
    return v.constant_value()


def p_bilinear(n, P):
    """``κ(x, T)`` for ``x`` in ``g_-1`` (row vector) and ``T`` in ``g_-2``.

    ``κ(x, T)^{ij} = sum P^{i jb}_{r s tb} x_r T_st + sum conj(P^{j ib}_{r t sb}) conj(x_r) T_st``
    which is skew-Hermitian in ``i, j`` whenever ``T`` is.
    """
    vals = {k: _constant(v) for k, v in P.items()}
    R = range(n)

    def kappa(x, T):
        out = [[G0] * n for _ in range(n)]
        for i, j, r, s, t in product(R, repeat=5):
            if not T[s][t]:
                continue
            p = vals.get((i, j, r, s, t))
            if p and x[r]:
                out[i][j] = out[i][j] + p * x[r] * T[s][t]
            q = vals.get((j, i, r, t, s))
            if q and x[r]:
                out[i][j] = out[i][j] + q.conjugate() * x[r].conjugate() * T[s][t]
        return out

    return kappa


def p_cochain(n, P):
    """``sum Z^a ∧ Z^b ⊗ κ(e_a, e_b)`` with ``e_a`` in ``g_-1``, ``e_b`` in ``g_-2``."""
    alg = Algebra(n)
    kappa = p_bilinear(n, P)
    m1, m2 = set(alg.by_grade(-1)), set(alg.by_grade(-2))

    def bil(u, v):
        a_is_m1 = u.grades() == {-1}
        x, y = (u, v) if a_is_m1 else (v, u)
        sign = 1 if a_is_m1 else -1
        if x.grades() != {-1} or y.grades() != {-2}:
            return alg.minus_two([[G0] * n for _ in range(n)])
        val = kappa(alg.minus_one_parameter(x), alg.minus_two_parameter(y))
        return alg.minus_two(val).scale(sign)

    return Cochain2.from_bilinear(alg, bil, args=sorted(m1 | m2))


def harmonicity_check(n, P):
    """``(∂*φ == 0, κ_11(φ) == 0, φ != 0)`` for the cochain of ``P``."""
    phi = p_cochain(n, P)
    return not codifferential(phi), kappa11_project(phi).is_zero(), not phi.is_zero()


def sample_tensor(n):
    """A nonzero tensor with all contractions zero, symmetric in ``r, s`` (``n >= 3``).

    At ``n = 2`` trace-free tensors of this type are not closed, so none is offered.
    """
    if n < 3:
        raise UnsupportedDimension("trace-free samples need n >= 3")
    if n >= 4:
        return {(2, 3, 0, 1, 0): -1, (2, 3, 1, 0, 0): -1}
    return {(0, 1, n - 1, n - 1, 0): 1}


def trace_sample(n):
    """``P^{1 1b}_{11,1b} = 1``: every contraction is nonzero."""
    return {(0, 0, 0, 0, 0): 1}
