import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from freecr.errors import ChartMismatch, DegenerateFrame, WrongDimension
from freecr.exactfield import ONE, ZERO, Chart, symbol
from freecr.model import flat_frame
from freecr.vfields import NOT_IN_SPAN, VectorField, bracket, build_frame

from strategies import gaussians, polynomials, vector_fields

CH = Chart(2)
coefficients = polynomials(names=CH.symbols[:4], max_terms=2, max_degree=1)


@settings(max_examples=60, deadline=None)
@given(vector_fields(), vector_fields())
def test_bracket_antisymmetry(V, W):
    assert bracket(V, W) == -bracket(W, V)
    assert bracket(V, V).is_zero()


@settings(max_examples=40, deadline=None)
@given(vector_fields(), vector_fields(), vector_fields())
def test_jacobi_identity(U, V, W):
    total = bracket(U, bracket(V, W)) + bracket(V, bracket(W, U)) + bracket(W, bracket(U, V))
    assert total.is_zero()


@settings(max_examples=60, deadline=None)
@given(vector_fields(), vector_fields(), coefficients)
def test_bracket_leibniz(V, W, f):
    assert bracket(V, W.scale(f)) == W.scale(V.apply(f)) + bracket(V, W).scale(f)


@settings(max_examples=60, deadline=None)
@given(vector_fields(), vector_fields())
def test_conjugation_commutes_with_bracket(V, W):
    assert bracket(V, W).conjugate() == bracket(V.conjugate(), W.conjugate())
    assert V.conjugate().conjugate() == V


@settings(max_examples=60, deadline=None)
@given(vector_fields(), coefficients)
def test_conjugate_field_acts_by_conjugation(V, f):
    assert V.conjugate().apply(f.conjugate()) == V.apply(f).conjugate()


def test_flat_levi_bracket():
    # hand computation: Z1 = d/dz1 - zb1 d/dw11 - zb2 d/dw12, and conj(d/dw11) = -d/dw11
    Z1 = flat_frame(2)[0]
    assert Z1 == VectorField(CH, {"z1": ONE, "w11": -symbol("zb1"), "w12": -symbol("zb2")})
    assert bracket(Z1, Z1.conjugate()) == VectorField.coordinate(CH, "w11", 2 * ONE)


def test_flat_holomorphic_fields_commute():
    Z = flat_frame(3)
    for a in Z:
        for b in Z:
            assert bracket(a, b).is_zero()


def test_chart_mismatch():
    with pytest.raises(ChartMismatch):
        bracket(flat_frame(2)[0], flat_frame(3)[0])


# -- frames ------------------------------------------------------------------------

def test_frame_dimensions():
    for n in (2, 3):
        frame = build_frame(flat_frame(n))
        assert frame.dimension == 2 * n + n * n == Chart(n).dimension
        assert len(frame.fields) == frame.dimension


@settings(max_examples=30, deadline=None)
@given(st.lists(gaussians, min_size=8, max_size=8))
def test_expand_recombine_round_trip(coeffs):
    frame = build_frame(flat_frame(2))
    V = VectorField(CH)
    for c, f in zip(coeffs, frame.fields):
        V = V + f.scale(c)
    assert list(frame.expand(V)) == [ZERO + c for c in coeffs]
    assert frame.recombine(frame.expand(V)) == V


def test_expand_respects_slots():
    frame = build_frame(flat_frame(2))
    levi = frame.levi[0][0]
    holo = list(range(frame.n))
    assert frame.expand(levi, holo) is NOT_IN_SPAN
    c = frame.expand(levi)
    assert c[frame.slot_levi(0, 0)] == ONE
    assert frame.expand(frame.holo[1], holo)[1] == ONE


def test_slot_labels():
    frame = build_frame(flat_frame(2))
    assert [frame.slot_label(k) for k in range(frame.dimension)] == [
        "1", "2", "1b", "2b", "[11b]", "[12b]", "[21b]", "[22b]"]


def test_repeated_field_is_degenerate():
    Z = flat_frame(2)
    with pytest.raises(DegenerateFrame):
        build_frame([Z[0], Z[0]])


def test_field_count_must_match_chart():
    with pytest.raises(WrongDimension):
        build_frame(flat_frame(3)[:2])
    with pytest.raises(WrongDimension):
        build_frame(flat_frame(2)[:1])


def test_singular_base_point():
    Z = flat_frame(2)
    z1 = symbol("z1")
    with pytest.raises(DegenerateFrame):
        build_frame([Z[0].scale(z1), Z[1]])
    # regular away from the origin
    assert build_frame([Z[0].scale(z1), Z[1]], {"z1": 1}).n == 2
