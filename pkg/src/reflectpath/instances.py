"""Problem instances (polygon, source, target) and their JSON file format.

Files use the `.poly.json` layout: `vertices` as [x, y] pairs, `source`,
`target`, optional `name`.  Coordinates are integers, exact decimal literals,
or "p/q" strings; floats are parsed as exact decimals, never binary floats.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .errors import InputError
from .geom import Point
from .polygon import OUTSIDE, Polygon, ValidationReport


class Instance:
    def __init__(self, polygon: Polygon, source: Point, target: Point, name: str = ""):
        self.polygon = polygon
        self.source = source
        self.target = target
        self.name = name

    def validate(self) -> ValidationReport:
        report = self.polygon.validate()
        issues = list(report.issues)
        if self.source == self.target:
            issues.append("source equals target")
        for label, p in (("source", self.source), ("target", self.target)):
            if self.polygon.contains(p) == OUTSIDE:
                issues.append(f"{label} lies outside the polygon")
        return ValidationReport(not issues, issues)


def _coord_to_fraction(value) -> Fraction:
    if isinstance(value, bool):
        raise InputError(f"bad coordinate {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad coordinate string {value!r}") from exc
    raise InputError(f"bad coordinate {value!r}")


def _pair_to_point(pair) -> Point:
    if not isinstance(pair, (list, tuple)) or len(pair) != 2:
        raise InputError(f"coordinate pair expected, got {pair!r}")
    return Point.from_xy(_coord_to_fraction(pair[0]), _coord_to_fraction(pair[1]))


def instance_from_dict(data: dict) -> Instance:
    if not isinstance(data, dict):
        raise InputError("instance document must be a JSON object")
    try:
        vertices = data["vertices"]
        source = data["source"]
        target = data["target"]
    except KeyError as exc:
        raise InputError(f"missing field {exc.args[0]!r}") from exc
    if not isinstance(vertices, list) or len(vertices) < 3:
        raise InputError("vertices must list at least 3 pairs")
    polygon = Polygon([_pair_to_point(v) for v in vertices])
    return Instance(
        polygon,
        _pair_to_point(source),
        _pair_to_point(target),
        name=str(data.get("name", "")),
    )


def _fraction_to_json(value: Fraction):
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


def instance_to_dict(inst: Instance) -> dict:
    doc = {
        "vertices": [[_fraction_to_json(v.x), _fraction_to_json(v.y)] for v in inst.polygon.vertices],
        "source": [_fraction_to_json(inst.source.x), _fraction_to_json(inst.source.y)],
        "target": [_fraction_to_json(inst.target.x), _fraction_to_json(inst.target.y)],
    }
    if inst.name:
        doc["name"] = inst.name
    return doc


def load_instance(path) -> Instance:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from exc
    inst = instance_from_dict(data)
    if not inst.name:
        inst.name = path.stem.removesuffix(".poly")
    return inst


def dump_instance(inst: Instance, path=None) -> str:
    text = json.dumps(instance_to_dict(inst), indent=2, sort_keys=True) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text
