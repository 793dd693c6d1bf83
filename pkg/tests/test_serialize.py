import json
from fractions import Fraction

import jsonschema
import pytest

from cp1graft.angles import Angle
from cp1graft.grafting import IndexTriple, decompose
from cp1graft.mobius import RiemannPoint
from cp1graft.serialize import (
    atomic_json,
    circle_from_json,
    circle_json,
    configuration_from_json,
    configuration_json,
    decomposition_json,
    dumps,
    envelope,
    point_from_json,
    point_json,
    realization_json,
    validate,
)
from cp1graft.triangles import atomic_classify, realize

from helpers import random_configuration, row_samples

P = Angle.pi


def test_point_roundtrip():
    assert point_json(RiemannPoint(1, 0)) == "inf"
    assert point_from_json("inf").is_infinity()
    p = RiemannPoint.from_complex(0.25 - 3j)
    assert point_from_json(point_json(p)).isclose(p)
    assert point_json(0) == [0.0, 0.0]


def test_circle_and_configuration_roundtrip(rng):
    for _ in range(30):
        cfg = random_configuration(rng)
        for c in cfg.circles:
            assert circle_from_json(circle_json(c)).distance(c) < 1e-14
        doc = validate(envelope("configuration", configuration_json(cfg)))
        back = configuration_from_json(json.loads(dumps(doc)))
        assert back.kind is cfg.kind
        assert max(a.distance(b) for a, b in zip(back.circles, cfg.circles)) < 1e-14


def test_realization_documents_validate():
    for row_id in ("H8", "S2", "E2", "E10"):
        r = realize(atomic_classify(*row_samples()[row_id]))
        doc = validate(envelope("realization", realization_json(r)))
        assert doc["atomic"]["table_row"] == row_id
        assert json.loads(dumps(doc)) == doc


def test_exact_angles_serialize_as_pi_strings():
    a = atomic_json(atomic_classify(P(3, 2), P(1, 3), P(1, 4)))
    assert a["angles"] == ["3pi/2", "pi/3", "pi/4"]
    assert validate(envelope("atomic", {"atomic": a}))


def test_decomposition_document():
    d = decompose(IndexTriple(tuple(Angle(q=Fraction(q)) for q in (9, 5, 3))))
    doc = validate(envelope("decomposition", decomposition_json(d)))
    assert doc["curve"]["G_ab"] == 2 and doc["curve"]["G_ac"] == 1
    assert doc["indices"] == ["9pi", "5pi", "3pi"]


def test_schema_rejects_bad_documents():
    with pytest.raises(jsonschema.ValidationError):
        validate({"schema": "cp1graft/1"})
    with pytest.raises(jsonschema.ValidationError):
        validate({"schema": "other/9", "type": "configuration", "circles": []})


def test_dumps_is_deterministic_and_finite():
    doc = {"b": 1.0, "a": [0.5, "inf"]}
    assert dumps(doc) == dumps(dict(reversed(list(doc.items()))))
    with pytest.raises(ValueError):
        dumps({"x": float("nan")})
