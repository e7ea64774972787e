"""JSON serialization for polygons, curves, types, and certificates.

Rationals travel as reduced strings "num/den" with positive denominator, so
files are bit-stable.  Readers validate everything they parse.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict

from . import errors
from .curve import CombinatorialType, ParametrizedTropicalCurve, make_curve
from .polygon import LatticePolygon, validate_polygon


def frac_to_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def frac_from_str(s: str) -> Fraction:
    try:
        if isinstance(s, str) and "/" in s:
            num, den = s.split("/")
            return Fraction(int(num), int(den))
        if isinstance(s, int):
            return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise errors.ParseError(f"bad rational {s!r}") from exc
    raise errors.ParseError(f"bad rational {s!r}")


# -- polygon ------------------------------------------------------------------


def polygon_to_dict(p: LatticePolygon) -> Dict[str, Any]:
    return {"vertices": [[x, y] for x, y in p.vertices]}


def polygon_from_dict(d: Dict[str, Any]) -> LatticePolygon:
    try:
        verts = d["vertices"]
    except (TypeError, KeyError) as exc:
        raise errors.ParseError("polygon file needs a 'vertices' array") from exc
    for v in verts:
        if not (isinstance(v, (list, tuple)) and len(v) == 2 and all(isinstance(x, int) for x in v)):
            raise errors.ParseError(f"non-integer polygon vertex {v!r}")
    return validate_polygon([tuple(v) for v in verts])


# -- curves -------------------------------------------------------------------


def curve_to_dict(c: ParametrizedTropicalCurve) -> Dict[str, Any]:
    return {
        "vertices": [
            {
                "id": v,
                "weight": w,
                "pos": [frac_to_str(c.position(v)[0]), frac_to_str(c.position(v)[1])],
            }
            for v, w in c.weights
        ],
        "edges": [
            {
                "id": e.id,
                "tail": e.tail,
                "head": e.head,
                "len": frac_to_str(e.length),
                "slope": list(e.slope),
            }
            for e in c.edges
        ],
        "legs": [{"id": l.id, "anchor": l.anchor, "slope": list(l.slope)} for l in c.legs],
    }


def curve_from_dict(d: Dict[str, Any]) -> ParametrizedTropicalCurve:
    try:
        vertices = [(v["id"], v.get("weight", 0)) for v in d["vertices"]]
        positions = {v["id"]: (frac_from_str(v["pos"][0]), frac_from_str(v["pos"][1])) for v in d["vertices"]}
        edges = [
            (e["id"], e["tail"], e["head"], frac_from_str(e["len"]), tuple(e["slope"]))
            for e in d.get("edges", [])
        ]
        legs = [(l["id"], l["anchor"], tuple(l["slope"])) for l in d.get("legs", [])]
    except (TypeError, KeyError, IndexError) as exc:
        raise errors.ParseError(f"malformed curve object: {exc}") from exc
    return make_curve(vertices, edges, legs, positions)


# -- combinatorial types --------------------------------------------------------


def type_to_dict(t: CombinatorialType) -> Dict[str, Any]:
    return {
        "vertices": [{"id": v, "weight": w} for v, w in t.weights],
        "edges": [
            {"id": i, "tail": tl, "head": h, "slope": list(s)} for i, tl, h, s in t.edges
        ],
        "legs": [{"id": i, "anchor": a, "slope": list(s)} for i, a, s in t.legs],
    }


def type_from_dict(d: Dict[str, Any]) -> CombinatorialType:
    try:
        return CombinatorialType(
            weights=tuple((v["id"], v.get("weight", 0)) for v in d["vertices"]),
            edges=tuple(
                (e["id"], e["tail"], e["head"], tuple(e["slope"])) for e in d.get("edges", [])
            ),
            legs=tuple((l["id"], l["anchor"], tuple(l["slope"])) for l in d.get("legs", [])),
        )
    except (TypeError, KeyError) as exc:
        raise errors.ParseError(f"malformed type object: {exc}") from exc


# -- generic file helpers --------------------------------------------------------


def dump_json(obj: Dict[str, Any], path: str) -> None:
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_json(path: str) -> Dict[str, Any]:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise errors.ParseError(f"{path}: invalid JSON ({exc})") from exc
