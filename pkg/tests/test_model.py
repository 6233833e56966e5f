import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from freecr.errors import DegenerateInput, UnsupportedDimension
from freecr.exactfield import GaussianRational, Scalar
from freecr.liealg import Algebra, commutator
from freecr.model import adapted, deformed_frame, fefferman, flat_frame, harmonic, quadric, smat
from freecr.model.adapted import IsotropicPlane, adapted_basis, gram_conditions, random_plane, standard_plane

from strategies import gaussians


# -- frames ------------------------------------------------------------------------

def test_frame_dimension_limits():
    with pytest.raises(UnsupportedDimension):
        flat_frame(1)
    with pytest.raises(UnsupportedDimension):
        deformed_frame(3)


def test_deformation_touches_only_the_first_field():
    F, D = flat_frame(5), deformed_frame(5)
    assert F[1:] == D[1:]
    diff = D[0] - F[0]
    assert set(diff.components) == {"w34"}


# -- quadric action ---------------------------------------------------------------

@pytest.mark.parametrize("which", ["g1", "g2"])
def test_quadric_certificate(which):
    cert = quadric.quadric_action_check(2, which)
    assert cert.congruence and cert.reduces_to_zero and cert.denominator_nonzero and cert.ok


def test_certificate_detects_a_wrong_action(monkeypatch):
    """Dropping the quadratic correction term of the g1 action breaks preservation."""
    real = quadric.transform

    def broken(which, W, z, param):
        Tp, z0 = real(which, W, z, param)
        if which == "g1":
            Y = param
            YY = smat.mul(Y, quadric._H(Y))
            Tp = smat.add(Tp, smat.scale(smat.mul(YY, W), Fraction(1, 2)))
        return Tp, z0

    monkeypatch.setattr(quadric, "transform", broken)
    assert not quadric.quadric_action_check(2, "g1").reduces_to_zero


def _const(x):
    return Scalar.coerce(x)


def _point_on_quadric(n, rng):
    def g():
        return GaussianRational(Fraction(rng.randint(-3, 3), rng.randint(1, 2)), rng.randint(-3, 3))

    z = [[_const(g()) for _ in range(n)]]
    S = [[None] * n for _ in range(n)]
    for k in range(n):
        S[k][k] = _const(GaussianRational(0, rng.randint(-3, 3)))
        for l in range(k + 1, n):
            S[k][l] = _const(g())
            S[l][k] = -S[k][l].conjugate()
    zz = smat.mul(smat.adjoint(z, quadric.INVOLUTION), z)
    W = smat.sub(S, smat.scale(zz, Fraction(1, 2)))
    return W, z, g


@pytest.mark.parametrize("seed", range(6))
@pytest.mark.parametrize("n", [2, 3])
def test_action_keeps_concrete_points_on_the_quadric(n, seed):
    rng = random.Random(seed)
    W, z, g = _point_on_quadric(n, rng)
    assert not any(x for row in quadric.defining_matrix(W, z) for x in row)
    Y = [[_const(g())] for _ in range(n)]
    T = [[None] * n for _ in range(n)]
    for k in range(n):
        T[k][k] = _const(GaussianRational(0, rng.randint(-2, 2)))
        for l in range(k + 1, n):
            T[k][l] = _const(g())
            T[l][k] = -T[k][l].conjugate()
    for which, param in (("g1", Y), ("g2", T)):
        Tp, _ = quadric.transform(which, W, z, param)
        if not smat.det(Tp):
            continue
        W2, z2 = quadric.act(which, W, z, param)
        assert not any(x for row in quadric.defining_matrix(W2, z2) for x in row)


# -- adapted bases ------------------------------------------------------------------

@pytest.mark.parametrize("n", [2, 3])
def test_adapted_basis_on_random_planes(n):
    rng = random.Random(100 + n)
    for _ in range(20):
        ab = adapted_basis(random_plane(n, rng))
        assert gram_conditions(n, ab) == []
        assert isinstance(ab.norm, Fraction) and ab.norm > 0


def test_standard_plane():
    ab = adapted_basis(standard_plane(2))
    assert gram_conditions(2, ab) == []


def test_non_isotropic_plane_is_rejected():
    n = 2
    e = [[GaussianRational(int(r == k)) for r in range(5)] for k in range(2)]
    # e_3 pairs with e_1 under the form, so span{e_1, e_3} is not isotropic
    bad = IsotropicPlane(n, (e[0], [GaussianRational(int(r == 3)) for r in range(5)]))
    with pytest.raises(DegenerateInput):
        adapted_basis(bad)
    with pytest.raises(DegenerateInput):
        IsotropicPlane(n, (e[0],))


@settings(max_examples=20, deadline=None)
@given(st.lists(gaussians, min_size=4, max_size=4))
def test_hermitian_form_symmetry(v):
    u = [v[0], v[1], GaussianRational(0), v[2], v[3]]
    w = [v[3], GaussianRational(1), v[0], v[1], v[2]]
    assert adapted.h(2, u, w) == adapted.h(2, w, u).conjugate()


# -- Fefferman embedding ----------------------------------------------------------

@pytest.mark.parametrize("n", [2, 3])
def test_fefferman_homomorphism(n):
    assert fefferman.check_homomorphism(n) == []
    assert fefferman.check_image_relations(n) == []
    assert fefferman.check_injective(n)


def test_fefferman_grading():
    # block positions of the |1|-graded target hit by each source grade
    assert fefferman.grade_map(2) == {-2: [-1], -1: [-1, 0], 0: [-1, 0, 1], 1: [0, 1], 2: [1]}


def test_target_form_is_symmetric_and_real():
    F = fefferman.target_form(3)
    assert F.adjoint() == F
    # F^2 is diagonal with nonzero entries, so F is invertible
    sq = F.matmul(F).entries
    assert all(r == c for r, c in sq) and len(sq) == F.size


@settings(max_examples=15, deadline=None)
@given(st.lists(st.integers(-2, 2), min_size=24, max_size=24), st.lists(st.integers(-2, 2), min_size=24, max_size=24))
def test_fefferman_on_random_elements(a, b):
    alg = Algebra(2)
    x, y = alg.combine(a), alg.combine(b)
    e = fefferman.embedding(2)
    assert e(x).matmul(e(y)) - e(y).matmul(e(x)) == e(commutator(x, y))


# -- harmonicity of the deformed invariant -------------------------------------------

def test_deformed_P_is_harmonic():
    from freecr.invariant import assemble_P, solve_normalization, structure_functions
    from freecr.vfields import build_frame

    sf = structure_functions(build_frame(deformed_frame(4)))
    P = assemble_P(sf, solve_normalization(sf))
    assert harmonic.harmonicity_check(4, P.P) == (True, True, True)


def test_kappa_is_skew_hermitian():
    kappa = harmonic.p_bilinear(4, harmonic.sample_tensor(4))
    rng = random.Random(5)
    x = [GaussianRational(rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(4)]
    T = [[GaussianRational(0)] * 4 for _ in range(4)]
    for k in range(4):
        T[k][k] = GaussianRational(0, rng.randint(-2, 2))
        for l in range(k + 1, 4):
            T[k][l] = GaussianRational(rng.randint(-2, 2), rng.randint(-2, 2))
            T[l][k] = -T[k][l].conjugate()
    K = kappa(x, T)
    assert any(v for row in K for v in row)
    assert all(K[i][j] == -K[j][i].conjugate() for i in range(4) for j in range(4))


def test_P_must_be_constant_for_the_cochain():
    from freecr.exactfield import symbol
    with pytest.raises(ValueError):
        harmonic.p_cochain(4, {(2, 3, 0, 1, 0): symbol("z1")})
