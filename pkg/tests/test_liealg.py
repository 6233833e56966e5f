import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from freecr import liealg
from freecr.exactfield import GaussianRational
from freecr.liealg import (
    Algebra, AlgebraElement, Cochain2, act_cochain1, act_cochain2, codifferential, commutator, decompose,
    form, in_algebra, rigidity_check,
)
from freecr.model import harmonic

from strategies import gaussians

ALG2 = Algebra(2)
ALG3 = Algebra(3)
fractions_small = st.integers(-3, 3)


def random_element(alg, rng, grades=None):
    idx = [k for k in range(alg.dimension) if grades is None or alg.basis[k].grade in grades]
    coords = [0] * alg.dimension
    for k in idx:
        coords[k] = rng.randint(-3, 3)
    return alg.combine(coords)


def random_cochain(alg, rng):
    minus = alg.dual_basis[0]
    vals = {}
    for i, a in enumerate(minus):
        for b in minus[i + 1:]:
            if rng.random() < 0.3:
                vals[a, b] = random_element(alg, rng)
    return Cochain2(alg, vals)


@pytest.mark.parametrize("n, dims", [(2, {-2: 4, -1: 4, 0: 8, 1: 4, 2: 4}),
                                     (3, {-2: 9, -1: 6, 0: 18, 1: 6, 2: 9})])
def test_grade_dimensions(n, dims):
    # su(n+1, n) has real dimension (2n+1)^2 - 1
    alg = Algebra(n)
    assert alg.grade_dimensions() == dims
    assert alg.dimension == (2 * n + 1) ** 2 - 1


@pytest.mark.parametrize("alg", [ALG2, ALG3], ids=["n2", "n3"])
def test_basis_lies_in_algebra(alg):
    for e in alg.basis:
        assert in_algebra(e.matrix)
        assert decompose(e.matrix).parts[e.grade] == e.matrix


@settings(max_examples=30, deadline=None)
@given(st.lists(fractions_small, min_size=24, max_size=24))
def test_coordinates_round_trip(coords):
    x = ALG2.combine(coords)
    assert in_algebra(x)
    assert list(ALG2.coordinates(x)) == coords
    assert decompose(x).total() == x


def test_form_is_the_block_antidiagonal():
    J = form(2)
    assert J.matmul(J) == AlgebraElement(2, {(k, k): 1 for k in range(5)})


def test_grading_all_pairs():
    assert liealg.check_grading(ALG2) == []
    assert liealg.check_grading(ALG3) == []


def test_jacobi_all_triples_n2():
    assert liealg.check_jacobi(ALG2) == []


def test_jacobi_random_triples_n3():
    rng = random.Random(3)
    d = ALG3.dimension
    triples = [tuple(rng.randrange(d) for _ in range(3)) for _ in range(400)]
    assert liealg.check_jacobi(ALG3, triples) == []


@pytest.mark.parametrize("alg", [ALG2, ALG3], ids=["n2", "n3"])
def test_minus_one_bracket(alg):
    assert liealg.check_minus_one_bracket(alg) == []


def test_minus_one_bracket_example():
    # e1 and i e1 bracket to 2i E11
    e1, ie1 = [GaussianRational(1), GaussianRational(0)], [GaussianRational(0, 1), GaussianRational(0)]
    T = liealg.g_minus_one_bracket(e1, ie1)
    assert T[0][0] == GaussianRational(0, 2) and not T[0][1] and not T[1][0] and not T[1][1]


@settings(max_examples=20, deadline=None)
@given(st.lists(gaussians, min_size=2, max_size=2), st.lists(gaussians, min_size=2, max_size=2))
def test_parameters_round_trip(X, Y):
    x = ALG2.minus_one(X)
    assert in_algebra(x) and ALG2.minus_one_parameter(x) == X
    T = liealg.g_minus_one_bracket(X, Y)
    t = ALG2.minus_two(T)
    assert in_algebra(t) and ALG2.minus_two_parameter(t) == T
    assert commutator(x, ALG2.minus_one(Y)) == t


def test_pairing_and_centre():
    for alg in (ALG2, ALG3):
        assert liealg.pairing_nondegenerate(alg)
        assert liealg.centre_check(alg) == (2, 0)


@pytest.mark.parametrize("n", [2, 3])
def test_g0_rigidity(n):
    rec = rigidity_check(n)
    assert rec.kernel_dimension == 2
    assert rec.spans_id_and_J
    # a Id + b J with (a, b) = (0, -1) or (0, 1): exactly -J and J
    assert rec.complex_structures == ((0, -1), (0, 1))
    assert rec.ok


# -- codifferential -----------------------------------------------------------------

@pytest.mark.parametrize("seed", range(3))
def test_codifferential_is_g0_equivariant(seed):
    rng = random.Random(seed)
    phi = random_cochain(ALG2, rng)
    A = random_element(ALG2, rng, grades={0})
    lhs = codifferential(act_cochain2(A, phi))
    rhs = act_cochain1(A, codifferential(phi), ALG2)
    assert lhs == rhs


@pytest.mark.parametrize("seed", range(3))
def test_codifferential_is_linear(seed):
    rng = random.Random(seed)
    phi, psi = random_cochain(ALG2, rng), random_cochain(ALG2, rng)
    keys = set(phi.values) | set(psi.values)
    total = Cochain2(ALG2, {k: phi(*k) + psi(*k) for k in keys})
    d_phi, d_psi, d_total = codifferential(phi), codifferential(psi), codifferential(total)
    for a in set(d_phi) | set(d_psi) | set(d_total):
        zero = AlgebraElement(2)
        assert d_total.get(a, zero) == d_phi.get(a, zero) + d_psi.get(a, zero)


@pytest.mark.parametrize("n", [3, 4])
def test_trace_free_sample_is_harmonic(n):
    assert harmonic.harmonicity_check(n, harmonic.sample_tensor(n)) == (True, True, True)


@pytest.mark.parametrize("n", [2, 3])
def test_traceful_sample_is_not_closed(n):
    closed, _, nonzero = harmonic.harmonicity_check(n, harmonic.trace_sample(n))
    assert nonzero and not closed


def test_cochain_antisymmetry():
    rng = random.Random(0)
    phi = random_cochain(ALG2, rng)
    for a, b in product(ALG2.dual_basis[0], repeat=2):
        assert phi(a, b) == -phi(b, a)
