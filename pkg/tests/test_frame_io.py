import pytest
from hypothesis import given, settings

from freecr.errors import ParseError, UnknownCoordinate, WrongFieldCount
from freecr.exactfield import GaussianRational, symbol
from freecr.frame_io import frame_document, parse_frame, serialize_frame
from freecr.model import deformed_frame, flat_frame
from freecr.report import run_pipeline

from strategies import vector_fields

HEADER = "format: 1\nn: 2\n"


def test_flat_frame_round_trip():
    doc = frame_document(flat_frame(2))
    again = parse_frame(serialize_frame(doc))
    assert again == doc
    assert again.vector_fields() == flat_frame(2)
    assert serialize_frame(again) == serialize_frame(doc)


def test_deformed_frame_round_trip():
    doc = frame_document(deformed_frame(4))
    assert parse_frame(serialize_frame(doc)).vector_fields() == deformed_frame(4)


@settings(max_examples=30, deadline=None)
@given(vector_fields(), vector_fields())
def test_random_fields_round_trip(V, W):
    doc = frame_document([V, W], base_point={"z1": GaussianRational(1, -2)})
    again = parse_frame(serialize_frame(doc))
    assert again == doc and again.vector_fields() == [V, W]
    assert again.digest() == doc.digest()


def test_coefficient_grammar_in_fields():
    text = HEADER + "field A\n  z1 = 1\n  w12 = conj(z2)*(-1)\nfield B\n  z2 = 1\n"
    A, B = parse_frame(text).vector_fields()
    assert A["w12"] == -symbol("zb2")


def test_comments_blank_lines_and_base_point():
    text = ("# a frame\nformat: 1\n\nn: 2   # rank four\nbase_point: z1 = 1/2 + i, w12 = -3\n"
            "field A  \n  z1 = 1   # unit\nfield B\n  z2 = 1\n")
    doc = parse_frame(text)
    assert doc.base_point_map() == {"z1": GaussianRational("1/2", 1), "w12": GaussianRational(-3)}
    assert [name for name, _ in doc.fields] == ["A", "B"]


@pytest.mark.parametrize("text, line, column", [
    (HEADER + "field A\n  z1 = z1^^2\nfield B\n  z2 = 1\n", 4, 11),
    ("format: 2\nn: 2\n", 1, 9),
    ("format: 1\nn: 12\n", 2, 4),
    ("fmt: 1\n", 1, 1),
    ("format: 1\nn: x\n", 2, 4),
    (HEADER + "  z1 = 1\n", 3, 3),
    (HEADER + "field A\n  z1 1\n", 4, 3),
    (HEADER + "field A\n  z1 = 1\n  z1 = 2\nfield B\n  z2 = 1\n", 5, 3),
    (HEADER + "base_point: z1 = z2\nfield A\n  z1 = 1\nfield B\n  z2 = 1\n", 3, 18),
])
def test_positioned_errors(text, line, column):
    with pytest.raises(ParseError) as err:
        parse_frame(text)
    assert (err.value.line, err.value.column) == (line, column)


def test_unknown_coordinate_position():
    with pytest.raises(UnknownCoordinate) as err:
        parse_frame(HEADER + "field A\n  z3 = 1\nfield B\n  z2 = 1\n")
    assert (err.value.line, err.value.column) == (4, 3)
    with pytest.raises(UnknownCoordinate) as err:
        parse_frame(HEADER + "field A\n  z1 = 1 + z3\nfield B\n  z2 = 1\n")
    assert (err.value.line, err.value.column) == (4, 12)


def test_wrong_field_count():
    with pytest.raises(WrongFieldCount):
        parse_frame(HEADER + "field A\n  z1 = 1\n")


def test_empty_file():
    with pytest.raises(ParseError):
        parse_frame("# nothing\n")


# -- pipeline documents -----------------------------------------------------------

def test_pipeline_flat_n3():
    doc = run_pipeline(frame_document(flat_frame(3)))
    d = doc.data
    assert d["verdict"] == "flat"
    for key in ("structure_functions", "A", "B", "C", "P"):
        assert d[key] == []


def test_pipeline_deformed_n4():
    d = run_pipeline(frame_document(deformed_frame(4))).data
    assert d["verdict"] == "not_flat"
    assert [e["index"] for e in d["P_independent"]] == [[3, 4, 1, 2, 1]]
    assert d["A"] == d["B"] == d["C"] == []


def test_pipeline_rejects_degenerate_input():
    Z = flat_frame(2)
    d = run_pipeline(frame_document([Z[0], Z[0]])).data
    assert d["verdict"] == "rejected" and d["rejected_by"] == "nondegenerate"
    assert d["cr"]["witnesses"][0]["check"] == "nondegenerate"


def test_pipeline_rejects_non_commuting_frame():
    Z = flat_frame(3)
    d = run_pipeline(frame_document([Z[0], Z[1] + Z[0].scale(symbol("z1")), Z[2]])).data
    assert d["verdict"] == "rejected" and d["rejected_by"] == "NonCommutingFrame"


def test_pipeline_is_deterministic():
    a = run_pipeline(frame_document(deformed_frame(4)))
    b = run_pipeline(parse_frame(serialize_frame(frame_document(deformed_frame(4)))))
    assert a.to_text() == b.to_text() and a.to_json() == b.to_json()
