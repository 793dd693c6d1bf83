"""Command-line front end: JSON reports on stdout, SVG diagrams to files.

Exit codes: 0 success, 1 verification failure, 2 parse or schema error,
3 invalid mathematical input, 4 forbidden input (integer exponent or an
index that is a multiple of 2pi).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import jsonschema

from . import serialize
from .angles import Angle, parse_angle
from .configurations import Kind, dual_circle
from .errors import CP1Error, IntegerExponent, InvalidIndices
from .grafting import IndexTriple, decompose
from .mobius import MapClass, MobiusMap, classify, fixed_points, rotation_invariant
from .monodromy import DEFAULT_TOL, peripheral_traces
from .triangles import atomic_classify, realize
from .differentials import DifferentialParams

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_MATH, EXIT_FORBIDDEN = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _parse_complex(v):
    if isinstance(v, bool):
        raise ValueError("booleans are not numbers")
    if isinstance(v, (int, float)):
        return complex(v)
    if isinstance(v, list) and len(v) == 2 and all(isinstance(x, (int, float)) for x in v):
        return complex(v[0], v[1])
    if isinstance(v, str):
        return complex(v.replace(" ", "").replace("i", "j"))
    raise ValueError(f"not a complex number: {v!r}")


def parse_matrix(text):
    """A 2x2 matrix given as JSON, entries numbers, ``[re, im]`` pairs or strings like ``1+2i``."""
    try:
        rows = json.loads(text)
        if not (isinstance(rows, list) and len(rows) == 2 and all(isinstance(r, list) and len(r) == 2 for r in rows)):
            raise ValueError("expected [[a, b], [c, d]]")
        return [[_parse_complex(x) for x in r] for r in rows]
    except (ValueError, json.JSONDecodeError) as exc:
        raise CliError(EXIT_PARSE, f"cannot parse matrix: {exc}") from exc


def parse_angles(texts, mode):
    """Parse angle literals; ``exact`` rejects radians, ``float`` converts everything to radians."""
    try:
        vals = [parse_angle(t) for t in texts]
    except ValueError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from exc
    if mode == "exact":
        if not all(v.exact for v in vals):
            raise CliError(EXIT_PARSE, "exact mode needs rational multiples of pi such as 3/2pi")
        return vals
    if mode == "float" or not all(v.exact for v in vals):
        return [Angle(radians=v.radians) for v in vals]
    return vals


def parse_theta(text):
    """An exponent: integer, ``p/q`` or decimal."""
    try:
        if "/" in text:
            return Fraction(text.strip())
        return float(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(EXIT_PARSE, f"cannot parse exponent {text!r}") from exc


def _real(z, eps=1e-12):
    z = complex(z)
    return serialize._num(z.real) if abs(z.imag) <= eps * max(1.0, abs(z)) else serialize.complex_json(z)


def cmd_classify_map(args):
    entries = parse_matrix(args.matrix)
    m = MobiusMap(entries)
    cls = classify(m)
    doc = {"class": cls.value, "tr2": _real(m.tr2), "fixed_points": []}
    if cls is not MapClass.IDENTITY:
        doc["fixed_points"] = [serialize.point_json(p) for p in fixed_points(m)]
    if cls is MapClass.ELLIPTIC:
        doc["rotation_invariant"] = [serialize._num(x) for x in rotation_invariant(m)]
    return serialize.envelope("map-classification", doc), EXIT_OK


def cmd_decompose(args):
    indices = parse_angles(args.indices, args.mode)
    try:
        triple = IndexTriple(tuple(indices))
    except InvalidIndices as exc:
        code = EXIT_MATH if any(v.q <= 0 for v in indices) else EXIT_FORBIDDEN
        raise CliError(code, str(exc)) from exc
    d = decompose(triple)
    if not d.reconstruct().isclose(triple, tol=0 if triple.exact else 1e-9):
        raise CliError(EXIT_MATH, "reconstruction check failed")
    return serialize.envelope("decomposition", serialize.decomposition_json(d)), EXIT_OK


def cmd_realize(args):
    a, b, c = parse_angles(args.angles, args.mode)
    r = realize(atomic_classify(a, b, c))
    return serialize.envelope("realization", serialize.realization_json(r)), EXIT_OK


def cmd_classify_angles(args):
    a, b, c = parse_angles(args.angles, args.mode)
    atomic = atomic_classify(a, b, c)
    return serialize.envelope("atomic", {"atomic": serialize.atomic_json(atomic)}), EXIT_OK


def cmd_verify(args):
    thetas = [parse_theta(t) for t in args.theta]
    for t in thetas:
        if t == round(t):
            raise CliError(EXIT_FORBIDDEN, f"exponent {t} is an integer")
    tol = args.tol if args.tol is not None else DEFAULT_TOL
    res = peripheral_traces(DifferentialParams(tuple(float(t) for t in thetas)), tol=tol, secondary=False)
    per = []
    for name, t, got, want, err in zip(("0", "1", "inf"), thetas, res.tr2, res.predicted, res.tr2_residuals):
        per.append({"puncture": name, "theta": float(t), "tr2_ode": serialize._num(got.real),
                    "tr2_predicted": serialize._num(want.real), "residual": float(err)})
    worst = max(max(res.tr2_residuals), res.product_residual)
    passed = worst < args.threshold
    doc = {"per_puncture": per, "product_residual": res.product_residual,
           "wronskian_drift": res.wronskian_drift, "tolerance": tol,
           "threshold": args.threshold, "passed": passed}
    return serialize.envelope("verification", doc), EXIT_OK if passed else EXIT_FAIL


def _load_document(path):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
        serialize.validate(doc)
    except (OSError, json.JSONDecodeError, jsonschema.ValidationError) as exc:
        raise CliError(EXIT_PARSE, f"invalid input document: {getattr(exc, 'message', exc)}") from exc
    return doc


def cmd_render(args):
    from .svg import render

    doc = _load_document(args.input)
    if doc["type"] == "configuration":
        cfg_doc = doc
    elif doc["type"] == "realization":
        cfg_doc = doc["configuration"]
    else:
        raise CliError(EXIT_PARSE, f"cannot render a {doc['type']} document")
    cfg = serialize.configuration_from_json(cfg_doc)
    points = []
    for (i, j), pts in sorted(cfg.intersections.items()):
        for name, p in zip("xy", pts):
            points.append((f"{name}{i + 1}{j + 1}", p))
    dual = dual_circle(cfg) if cfg.kind is Kind.HYPERBOLIC else None
    svg = render(cfg.circles, points, chart=args.chart, dual=dual)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return None, EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="cp1graft", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=("auto", "exact", "float"), default="auto",
                        help="angle arithmetic (auto: exact when every literal is a multiple of pi)")
    common.add_argument("--out", help="write the output here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify-map", parents=[common], help="classify a Mobius transformation")
    p.add_argument("matrix", help='2x2 matrix, e.g. "[[0,1],[-1,0]]"')
    p.set_defaults(func=cmd_classify_map)

    p = sub.add_parser("decompose", parents=[common], help="atomic structure plus grafting curve")
    p.add_argument("indices", nargs=3, help="indices such as 9pi 5pi 3pi")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("classify-angles", parents=[common], help="table row of an atomic angle triple")
    p.add_argument("angles", nargs=3)
    p.set_defaults(func=cmd_classify_angles)

    p = sub.add_parser("realize", parents=[common], help="circle configuration realizing an atomic triple")
    p.add_argument("angles", nargs=3)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("render", parents=[common], help="SVG of a configuration or realization document")
    p.add_argument("input")
    p.add_argument("--chart", choices=("plane", "stereo"), default="plane")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", parents=[common], help="ODE monodromy check of the differential family")
    p.add_argument("theta", nargs=3, help="exponents such as 1/2 1/3 0.25")
    p.add_argument("--tol", type=float, default=None, help="integrator tolerance")
    p.add_argument("--threshold", type=float, default=1e-5, help="pass/fail bound on the residuals")
    p.set_defaults(func=cmd_verify)
    return parser


def _emit(doc, out):
    text = serialize.dumps(serialize.validate(doc)) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        doc, code = args.func(args)
        if doc is not None:
            _emit(doc, args.out)
        return code
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except IntegerExponent as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORBIDDEN
    except (CP1Error, ValueError, ZeroDivisionError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
