import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from freecr.crverify import nijenhuis_tensor
from freecr.errors import MissingNijenhuis, NonCommutingFrame, NotFree, TraceResidual
from freecr.exactfield import ZERO, GaussianRational, I, Scalar, symbol
from freecr.invariant import (
    FAMILIES, StructureFunctions, assemble_P, contractions, flatness_verdict, independent_entries,
    solve_normalization, structure_functions,
)
from freecr.model import deformed_frame, flat_frame
from freecr.vfields import build_frame

from strategies import gaussians


def pipeline(fields):
    frame = build_frame(fields)
    sf = structure_functions(frame)
    coeffs = solve_normalization(sf)
    return frame, sf, coeffs, assemble_P(sf, coeffs)


def symmetric_f(n, rng):
    """Random ``f^{[i jb]}_{r [s tb]}`` symmetric in ``r, s``, roughly half the entries nonzero."""
    f = {}
    for i, j, r, s, t in product(range(n), repeat=5):
        if r <= s and rng.random() < 0.5:
            v = GaussianRational(Fraction(rng.randint(-5, 5), rng.randint(1, 4)), rng.randint(-5, 5))
            if v:
                f[i, j, r, s, t] = f[i, j, s, r, t] = Scalar.coerce(v)
    return StructureFunctions(n, f_rs_ijk=f)


def _symmetric_in_rs(P):
    return all(P.P.get((i, j, s, r, t), ZERO) == v for (i, j, r, s, t), v in P.P.items())


# -- flat model --------------------------------------------------------------------

@pytest.mark.parametrize("n", [2, 3, 4])
def test_flat_model_is_flat(n):
    frame, sf, coeffs, P = pipeline(flat_frame(n))
    assert sf.is_zero()
    assert all(not fam for fam in sf.families().values())
    assert coeffs.is_zero() and P.is_zero()
    N = nijenhuis_tensor(frame) if n == 2 else None
    assert flatness_verdict(P, N).label == "flat"


@settings(max_examples=5, deadline=None)
@given(st.lists(gaussians, min_size=9, max_size=9).filter(
    lambda g: (g[0] * (g[4] * g[8] - g[5] * g[7]) - g[1] * (g[3] * g[8] - g[5] * g[6])
               + g[2] * (g[3] * g[7] - g[4] * g[6]))))
def test_flatness_survives_constant_frame_change(g):
    Z = flat_frame(3)
    X = [sum((Z[j].scale(ZERO + g[3 * j + k]) for j in range(1, 3)), Z[0].scale(ZERO + g[k])) for k in range(3)]
    _, sf, _, P = pipeline(X)
    assert P.is_zero()


# -- deformed example ----------------------------------------------------------------

def test_deformed_structure_functions():
    _, sf, coeffs, P = pipeline(deformed_frame(4))
    nonzero = {name: fam for name, fam in sf.families().items() if fam}
    assert set(nonzero) == {"f_rs_ijk", "f_rs_bijk"}
    # keys are 0-based: target [3 4b], sources 1 and [2 1b] (and the i <-> j twin)
    assert nonzero["f_rs_ijk"] == {(2, 3, 0, 1, 0): -1, (2, 3, 1, 0, 0): -1}
    indep = independent_entries(sf)
    assert len(indep) == 1
    name, key, value = indep[0]
    assert value * value.conjugate() == 1
    assert key[:2] == (2, 3) and sorted(key[2:4]) == [0, 1]
    assert coeffs.is_zero()


def test_deformed_invariant():
    _, _, _, P = pipeline(deformed_frame(4))
    assert P.P == {(2, 3, 0, 1, 0): -1, (2, 3, 1, 0, 0): -1}
    assert P.independent_entries() == [((2, 3, 0, 1, 0), -1)]
    assert flatness_verdict(P).label == "not_flat"


# -- normalization ------------------------------------------------------------------

@pytest.mark.parametrize("n", [2, 3, 4])
@settings(max_examples=10, deadline=None)
@given(seed=st.integers(0, 2**32))
def test_normalized_P_is_trace_free_and_symmetric(n, seed):
    sf = symmetric_f(n, random.Random(seed))
    P = assemble_P(sf, solve_normalization(sf))
    assert not any(contractions(n, P.P).values())
    assert _symmetric_in_rs(P)


def test_symbolic_normalization():
    z1, zb2 = symbol("z1"), symbol("zb2")
    sf = StructureFunctions(3, f_rs_ijk={(0, 0, 0, 0, 0): z1 / (1 + zb2), (1, 2, 0, 2, 1): z1,
                                         (1, 2, 2, 0, 1): z1})
    P = assemble_P(sf, solve_normalization(sf))
    assert not any(contractions(3, P.P).values())


def test_plain_c_relation_is_selected():
    sf = StructureFunctions(3, f_rs_ijk={(0, 1, 1, 1, 0): 1, (1, 1, 0, 2, 2): 2, (1, 1, 2, 0, 2): 2})
    assert solve_normalization(sf).c_variant in ("plain", "both")
    # a non-real B-trace separates the two readings
    sf = StructureFunctions(3, f_rs_ijk={(0, 1, 0, 1, 1): I, (0, 1, 1, 0, 1): I})
    assert solve_normalization(sf).c_variant == "plain"


def test_asymmetric_input_is_rejected():
    sf = StructureFunctions(3, f_rs_ijk={(0, 1, 0, 2, 1): 1})
    with pytest.raises(TraceResidual):
        assemble_P(sf, solve_normalization(sf))


def test_n2_verdict_needs_nijenhuis():
    _, _, _, P = pipeline(flat_frame(2))
    with pytest.raises(MissingNijenhuis):
        flatness_verdict(P)
    assert flatness_verdict(P, {(1, 2, 1): symbol("z1")}).label == "not_flat"


# -- rejected frames ----------------------------------------------------------------

def test_non_commuting_frame():
    Z = flat_frame(3)
    X = [Z[0], Z[1] + Z[0].scale(symbol("z1")), Z[2]]
    with pytest.raises(NonCommutingFrame):
        structure_functions(build_frame(X))


def test_not_free():
    Z = flat_frame(3)
    X = [Z[0] + Z[1].conjugate().scale(symbol("z2")), Z[1], Z[2]]
    with pytest.raises(NotFree):
        structure_functions(build_frame(X))


def test_families_are_listed_in_order():
    assert FAMILIES[0] == "f_r_ijk" and len(FAMILIES) == 6
