"""JSON encoding of library objects (schema tag ``cp1graft/1``)."""

from __future__ import annotations

import json
from importlib import resources

import jsonschema

from .angles import Angle
from .circles import Circle
from .configurations import PAIRS, build_configuration
from .mobius import RiemannPoint

SCHEMA_TAG = "cp1graft/1"


def _num(x):
    """Round-trip-safe float; integral values stay floats."""
    x = float(x)
    return 0.0 if x == 0 else x


def complex_json(z):
    z = complex(z)
    return [_num(z.real), _num(z.imag)]


def point_json(p):
    p = RiemannPoint.coerce(p)
    if p.is_infinity(1e-14):
        return "inf"
    return complex_json(p.to_complex())


def point_from_json(v):
    if v == "inf":
        return RiemannPoint(1, 0)
    return RiemannPoint.from_complex(complex(v[0], v[1]))


def circle_json(c):
    return {"A": _num(c.A), "B": complex_json(c.B), "C": _num(c.C)}


def circle_from_json(d):
    return Circle(d["A"], complex(d["B"][0], d["B"][1]), d["C"])


def angle_json(x):
    return x.to_json() if isinstance(x, Angle) else _num(x)


def configuration_json(cfg):
    return {
        "kind": cfg.kind.value,
        "circles": [circle_json(c) for c in cfg.circles],
        "intersections": {f"{i + 1}{j + 1}": [point_json(p) for p in cfg.intersections[(i, j)]]
                          for i, j in PAIRS},
        "common_point": None if cfg.common_point is None else point_json(cfg.common_point),
    }


def configuration_from_json(d):
    return build_configuration(*(circle_from_json(c) for c in d["circles"]))


def atomic_json(a):
    return {
        "angles": [angle_json(x) for x in a.angles],
        "kind": a.kind.value,
        "targets": [angle_json(x) for x in a.target_angles],
        "signs": a.signs,
        "star": a.star,
        "table_row": a.table_row,
        "big_slot": a.big_slot,
        "approximate": a.approximate,
    }


def realization_json(r):
    return {
        "atomic": atomic_json(r.atomic),
        "configuration": configuration_json(r.configuration),
        "vertices": [point_json(v) for v in r.vertices],
        "target": {
            "circles": [circle_json(c) for c in r.target.circles],
            "vertices": [point_json(v) for v in r.target.vertices],
            "star": r.target.star,
            "region": r.target.region,
        },
    }


def decomposition_json(d):
    return {
        "indices": [angle_json(x) for x in d.indices.indices],
        "relabel": list(d.relabel),
        "atomic": atomic_json(d.atomic),
        "curve": {f"G_{k}": v for k, v in d.curve.as_dict().items()},
        "perturbation": d.perturbation,
        "case": d.case,
        "exceptional": d.exceptional,
    }


def envelope(kind, payload):
    out = {"schema": SCHEMA_TAG, "type": kind}
    out.update(payload)
    return out


def load_schema():
    return json.loads(resources.files("cp1graft").joinpath("data/schema.json").read_text())


def validate(doc):
    """Validate a document against the bundled schema; raises jsonschema.ValidationError."""
    jsonschema.validate(doc, load_schema())
    return doc


def dumps(doc):
    return json.dumps(doc, sort_keys=True, indent=2, allow_nan=False)


__all__ = [
    "SCHEMA_TAG",
    "point_json",
    "point_from_json",
    "circle_json",
    "circle_from_json",
    "configuration_json",
    "configuration_from_json",
    "atomic_json",
    "realization_json",
    "decomposition_json",
    "envelope",
    "validate",
    "dumps",
]
