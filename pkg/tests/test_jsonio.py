import json

from brownalg.qi import QI
from brownalg.groups import Z4_3
from brownalg import jsonio
from brownalg.composition import build_split_quaternions


def test_algebra_round_trip_bit_exact(model_b):
    doc = jsonio.algebra_json(model_b.alg, seed=0)
    text = jsonio.dumps(doc)
    back = jsonio.algebra_from_json(json.loads(text))
    assert jsonio.dumps(jsonio.algebra_json(back, seed=0)) == text
    assert back.dim == 56 and back.unit_index == model_b.alg.unit_index


def test_algebra_round_trip_vector_unit(albert):
    doc = jsonio.algebra_json(albert.alg)
    back = jsonio.algebra_from_json(json.loads(jsonio.dumps(doc)))
    assert back.one == albert.alg.one
    assert back.unit_index is None


def test_grading_round_trip(model_b):
    fp = None
    doc = jsonio.grading_json(model_b.grading, g0=model_b.g0, fingerprint=fp)
    back, g0 = jsonio.grading_from_json(json.loads(jsonio.dumps(doc)), model_b.alg)
    assert g0 == model_b.g0
    assert back.degrees == model_b.grading.degrees
    assert back.verified


def test_lie_round_trip(der6):
    doc = jsonio.lie_json(der6.lie, seed=0)
    text = jsonio.dumps(doc)
    back = jsonio.lie_from_json(json.loads(text))
    assert back.dim == 78
    assert jsonio.dumps(jsonio.lie_json(back, seed=0)) == text
    assert back.degrees == der6.lie.degrees


def test_vec_json_sorted():
    v = {5: QI(1), 2: QI(0, -1)}
    assert jsonio.vec_json(v) == [[2, "-1*i"], [5, "1"]]


def test_schema_guards():
    import pytest
    with pytest.raises(ValueError):
        jsonio.algebra_from_json({"schema": "nope"})
    with pytest.raises(ValueError):
        jsonio.lie_from_json({"schema": "nope"})
