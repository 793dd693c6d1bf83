"""Regenerate src/cp1graft/data/atomic_tables.json from the printed rows.

Each row below is transcribed as text; the linear forms are parsed here so
that the JSON fixture never needs editing by hand.
"""

import json
import re
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "cp1graft" / "data" / "atomic_tables.json"

S, B, G = "small", "big", "huge"

# (id, kind, ranges, conditions, targets, signs)
ROWS = [
    ("H1", "H", (S, S, S), ["a+b+c<pi"], "a,b,c", "+++"),
    ("H2", "H", (S, S, S), ["a+pi<b+c"], "a,pi-b,pi-c", "+--"),
    ("H3", "H", (S, S, S), ["b+pi<a+c"], "pi-a,b,pi-c", "-+-"),
    ("H4", "H", (S, S, S), ["c+pi<a+b"], "pi-a,pi-b,c", "--+"),
    ("H5", "H", (B, S, S), ["a+b+c>3pi"], "2pi-a,pi-b,pi-c", "---"),
    ("H6", "H", (S, B, S), ["a+b+c>3pi"], "pi-a,2pi-b,pi-c", "---"),
    ("H7", "H", (S, S, B), ["a+b+c>3pi"], "pi-a,pi-b,2pi-c", "---"),
    ("H8", "H", (B, S, S), ["a-b-c>pi"], "2pi-a,b,c", "-++"),
    ("H9", "H", (S, B, S), ["-a+b-c>pi"], "a,2pi-b,c", "+-+"),
    ("H10", "H", (S, S, B), ["-a-b+c>pi"], "a,b,2pi-c", "++-"),
    ("H11", "H", (B, S, S), ["a-b+c<pi"], "a-pi,pi-b,c", "+-+"),
    ("H12", "H", (S, B, S), ["a+b-c<pi"], "a,b-pi,pi-c", "++-"),
    ("H13", "H", (S, S, B), ["-a+b+c<pi"], "pi-a,b,c-pi", "-++"),
    ("H14", "H", (B, S, S), ["a+b-c<pi"], "a-pi,b,pi-c", "++-"),
    ("H15", "H", (S, B, S), ["-a+b+c<pi"], "pi-a,b-pi,c", "-++"),
    ("H16", "H", (S, S, B), ["a-b+c<pi"], "a,pi-b,c-pi", "+-+"),
    ("S1", "S", (S, S, S), ["a+b+c>pi", "a+pi>b+c", "b+pi>a+c", "c+pi>a+b"], "a,b,c", "+++"),
    ("S2", "S", (B, S, S), ["3pi>a+b+c", "a+b>pi+c", "a+c>pi+b", "pi>a-b-c"], "2pi-a,pi-b,pi-c", "---"),
    ("S3", "S", (S, B, S), ["3pi>a+b+c", "a+b>pi+c", "b+c>pi+a", "pi>-a+b-c"], "pi-a,2pi-b,pi-c", "---"),
    ("S4", "S", (S, S, B), ["3pi>a+b+c", "b+c>pi+a", "a+c>pi+b", "pi>-a-b+c"], "pi-a,pi-b,2pi-c", "---"),
    ("E1", "E", (S, S, S), ["a+b+c=pi"], "a,b,c", "+++"),
    ("E2", "E", (S, S, S), ["-a+b+c=pi"], "a,pi-c,pi-b", "-++*"),
    ("E3", "E", (S, S, S), ["a-b+c=pi"], "pi-a,pi-c,b", "+-+*"),
    ("E4", "E", (S, S, S), ["a+b-c=pi"], "pi-a,c,pi-b", "++-*"),
    ("E5", "E", (B, S, S), ["a+b+c=3pi"], "2pi-a,pi-c,pi-b", "+++*"),
    ("E6", "E", (S, B, S), ["a+b+c=3pi"], "pi-a,pi-c,2pi-b", "+++*"),
    ("E7", "E", (S, S, B), ["a+b+c=3pi"], "pi-a,2pi-c,pi-b", "+++*"),
    ("E8", "E", (B, S, S), ["a-b-c=pi"], "2pi-a,c,b", "+--*"),
    ("E9", "E", (S, B, S), ["-a+b-c=pi"], "a,c,2pi-b", "-+-*"),
    ("E10", "E", (S, S, B), ["-a-b+c=pi"], "a,2pi-c,b", "--+*"),
    ("E11", "E", (B, S, S), ["a-b+c=pi"], "a-pi,pi-b,c", "+-+"),
    ("E12", "E", (S, B, S), ["a+b-c=pi"], "a,b-pi,pi-c", "++-"),
    ("E13", "E", (S, S, B), ["-a+b+c=pi"], "pi-a,b,c-pi", "-++"),
    ("E14", "E", (B, S, S), ["a+b-c=pi"], "a-pi,b,pi-c", "++-"),
    ("E15", "E", (S, B, S), ["-a+b+c=pi"], "pi-a,b-pi,c", "-++"),
    ("E16", "E", (S, S, B), ["a-b+c=pi"], "a,pi-b,c-pi", "+-+"),
    ("E17", "E", (G, S, S), ["a-b-c=pi"], "a-2pi,pi-b,pi-c", "+--"),
    ("E18", "E", (S, G, S), ["-a+b-c=pi"], "pi-a,b-2pi,pi-c", "-+-"),
    ("E19", "E", (S, S, G), ["-a-b+c=pi"], "pi-a,pi-b,c-2pi", "--+"),
]

KINDS = {"H": "hyperbolic", "S": "spherical", "E": "euclidean"}
TABLE = {"H": 1, "S": 2, "E": 3}
VARS = {"a": 0, "b": 1, "c": 2, "pi": 3}
TERM = re.compile(r"([+-]?)(\d*)(pi|a|b|c)")


def parse_form(text):
    """'2pi-a' -> [-1, 0, 0, 2]: coefficients of (a, b, c, pi)."""
    coeffs = [0, 0, 0, 0]
    pos = 0
    for m in TERM.finditer(text):
        if m.start() != pos:
            raise ValueError(f"cannot parse {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeffs[VARS[m.group(3)]] += sign * int(m.group(2) or 1)
        pos = m.end()
    if pos != len(text):
        raise ValueError(f"cannot parse {text!r}")
    return coeffs


def parse_condition(text):
    """'a+pi<b+c' -> lhs - rhs as coefficients plus the comparison operator."""
    lhs, op, rhs = re.split(r"([<>=])", text)
    left, right = parse_form(lhs), parse_form(rhs)
    return {"form": [x - y for x, y in zip(left, right)], "op": op, "text": text}


def build():
    rows = []
    for rid, kind, ranges, conds, targets, signs in ROWS:
        rows.append({
            "id": rid,
            "table": TABLE[kind],
            "kind": KINDS[kind],
            "ranges": list(ranges),
            "conditions": [parse_condition(c) for c in conds],
            "targets": [parse_form(t) for t in targets.split(",")],
            "target_text": targets.split(","),
            "signs": signs.rstrip("*"),
            "star": signs.endswith("*"),
        })
    return {"format": "cp1graft-atomic-tables/1", "rows": rows}


if __name__ == "__main__":
    data = build()
    body = ",\n".join("  " + json.dumps(r) for r in data["rows"])
    head = json.dumps({"format": data["format"]})[:-1]
    OUT.write_text(head + ',\n "rows": [\n' + body + "\n ]}\n")
    print(f"wrote {len(ROWS)} rows to {OUT}")
