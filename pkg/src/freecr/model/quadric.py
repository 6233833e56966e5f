"""Preservation of the quadric ``W + W* + z* z = 0`` by the ``P_+`` action.

Points of the big cell are isotropic planes spanned by the columns of
``[I; z; W]`` (blocks ``n, 1, n``).  ``exp`` of a ``g_1`` element with
column parameter ``Y`` and of a ``g_2`` element with skew-Hermitian
parameter ``T`` act by::

    g1:  Tp = I + Y z - 1/2 Y Y* W,   z' = (z - Y* W) Tp^-1,   W' = W Tp^-1
    g2:  Tp = I + T W,                z' = z Tp^-1,            W' = W Tp^-1
"""

from dataclasses import dataclass
from fractions import Fraction

from ..exactfield import Involution, ZERO, symbol
from . import smat

HALF = Fraction(1, 2)
INVOLUTION = Involution(complex_families=frozenset({"z", "W", "Y"}), skew_families=frozenset({"t"}))


def _conj(s):
    return s.conjugate(INVOLUTION)


def _H(A):
    return smat.adjoint(A, INVOLUTION)


def symbolic_point(n):
    W = [[symbol(f"W{k}{l}") for l in range(1, n + 1)] for k in range(1, n + 1)]
    z = [[symbol(f"z{l}") for l in range(1, n + 1)]]
    return W, z


def symbolic_Y(n):
    return [[symbol(f"Y{k}")] for k in range(1, n + 1)]


def symbolic_T(n):
    """Skew-Hermitian matrix of symbols ``t_kl`` (``k <= l``)."""
    T = [[ZERO] * n for _ in range(n)]
    for k in range(n):
        for l in range(k, n):
            t = symbol(f"t{k + 1}{l + 1}")
            T[k][l] = t
            if k != l:
                T[l][k] = -_conj(t)
    return T


def defining_matrix(W, z):
    """``E = W + W* + z* z``."""
    return smat.add(smat.add(W, _H(W)), smat.mul(_H(z), z))


def transform(which, W, z, param):
    """``(Tp, z0)`` with ``W' = W Tp^-1`` and ``z' = z0 Tp^-1``."""
    I = smat.identity(len(W))
    if which == "g1":
        Y = param
        YY = smat.mul(Y, _H(Y))
        Tp = smat.sub(smat.add(I, smat.mul(Y, z)), smat.scale(smat.mul(YY, W), HALF))
        return Tp, smat.sub(z, smat.mul(_H(Y), W))
    if which == "g2":
        return smat.add(I, smat.mul(param, W)), z
    raise ValueError("which must be 'g1' or 'g2'")


def act(which, W, z, param):
    """``(W', z')``.  Rational in the inputs, so keep them small."""
    Tp, z0 = transform(which, W, z, param)
    d = smat.det(Tp)
    inv = smat.scale(smat.adjugate(Tp), d.inverse())
    return smat.mul(W, inv), smat.mul(z0, inv)


def cleared_image(which, W, z, param):
    """``(N, d, adj)`` with ``E(W', z') = N / (d conj(d))`` and ``N`` polynomial."""
    Tp, z0 = transform(which, W, z, param)
    d = smat.det(Tp)
    adj = smat.adjugate(Tp)
    adjH = _H(adj)
    N = smat.add(
        smat.add(smat.scale(smat.mul(W, adj), _conj(d)), smat.scale(smat.mul(adjH, _H(W)), d)),
        smat.mul(smat.mul(adjH, smat.mul(_H(z0), z0)), adj),
    )
    return N, d, adj


@dataclass(frozen=True)
class QuadricCertificate:
    n: int
    which: str
    congruence: bool  # N = adj* E adj
    reduces_to_zero: bool  # N vanishes on the quadric
    denominator_nonzero: bool  # det Tp does not vanish identically on the quadric

    @property
    def ok(self):
        return self.congruence and self.reduces_to_zero and self.denominator_nonzero


def quadric_action_check(n, which):
    """Exact certificate that the action preserves the quadric ideal.

    With ``d = det Tp`` and ``adj`` its adjugate, ``E(W', z') d conj(d) = N``
    is a polynomial matrix.  Two independent checks: ``N = adj* E adj``, which
    writes each entry of ``N`` as a combination of entries of ``E``; and
    ``N`` reducing to zero under ``W_kl -> -Wb_lk - zb_k z_l``.
    """
    W, z = symbolic_point(n)
    param = symbolic_Y(n) if which == "g1" else symbolic_T(n)
    N, d, adj = cleared_image(which, W, z, param)
    E = defining_matrix(W, z)
    congruent = smat.mul(smat.mul(_H(adj), E), adj) == N

    on_quadric = {f"W{k}{l}": (-symbol(f"Wb{l}{k}") - symbol(f"zb{k}") * symbol(f"z{l}")).num
                  for k in range(1, n + 1) for l in range(1, n + 1)}
    reduced = all(not e.num.substitute(on_quadric) for row in N for e in row)
    nonzero = bool((d * _conj(d)).num.substitute(on_quadric))
    return QuadricCertificate(n, which, congruent, reduced, nonzero)
