"""JSON wire formats for every instance type, bit-exact.

Rationals travel as ``"p/q"`` strings.  Subsets are sorted point-index
arrays; families are sorted by their bit-vector encoding, so dumps are
canonical and byte-stable.  Every loader validates structurally and raises
:class:`InputError` with a JSON-path-like location.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .codensity import Arrow, Cone
from .errors import FinprobError, InputError
from .integrate import SimpleFunction
from .lipmetric import FiniteMetricSpace
from .measure import Measure, Mode
from .monad import SimplexPoint
from .represent import Functional, Slab
from .setalg import Algebra, GroundSet, SubsetFamily

FORMAT_VERSION = 1


def dump_fraction(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(raw: Any, location: str) -> Fraction:
    if isinstance(raw, int):
        return Fraction(raw)
    if not isinstance(raw, str):
        raise InputError(f"expected a 'p/q' string, got {type(raw).__name__}", location)
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational {raw!r}: {exc}", location) from None


def _expect(data: Any, kind: type, location: str):
    if not isinstance(data, kind):
        raise InputError(
            f"expected {kind.__name__}, got {type(data).__name__}", location
        )
    return data


def _field(data: dict, key: str, location: str):
    if key not in data:
        raise InputError(f"missing required field {key!r}", location)
    return data[key]


# -- ground sets, families, algebras ---------------------------------------


def dump_ground(ground: GroundSet) -> list[str]:
    return list(ground.points)


def load_ground(data: Any, location: str = "$.points") -> GroundSet:
    points = _expect(data, list, location)
    if not all(isinstance(p, str) for p in points):
        raise InputError("points must be strings", location)
    try:
        return GroundSet(tuple(points))
    except ValueError as exc:
        raise InputError(str(exc), location) from None


def _mask_to_indices(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def _indices_to_mask(indices: Any, ground: GroundSet, location: str) -> int:
    items = _expect(indices, list, location)
    mask = 0
    for pos, idx in enumerate(items):
        if not isinstance(idx, int) or not 0 <= idx < ground.size:
            raise InputError(f"bad point index {idx!r}", f"{location}[{pos}]")
        mask |= 1 << idx
    return mask


def dump_family(family: SubsetFamily) -> dict:
    return {
        "points": dump_ground(family.ground),
        "family": [_mask_to_indices(m) for m in family.masks],
    }


def load_family(data: Any, location: str = "$") -> SubsetFamily:
    obj = _expect(data, dict, location)
    ground = load_ground(_field(obj, "points", location), f"{location}.points")
    members = _expect(_field(obj, "family", location), list, f"{location}.family")
    masks = tuple(
        _indices_to_mask(item, ground, f"{location}.family[{i}]")
        for i, item in enumerate(members)
    )
    return SubsetFamily(ground, masks)


def dump_algebra(algebra: Algebra) -> dict:
    return {
        "points": dump_ground(algebra.ground),
        "family": [_mask_to_indices(m) for m in algebra.members],
    }


def load_algebra(data: Any, location: str = "$.algebra") -> Algebra:
    family = load_family(data, location)
    try:
        return Algebra.from_members(family.ground, family.masks)
    except ValueError as exc:
        raise InputError(str(exc), f"{location}.family") from None


# -- measures ----------------------------------------------------------------


def dump_measure(p: Measure) -> dict:
    return {
        "algebra": dump_algebra(p.algebra),
        "weights": {str(i): dump_fraction(w) for i, w in enumerate(p.weights)},
        "mode": p.mode.value,
    }


def load_measure(data: Any, location: str = "$") -> Measure:
    obj = _expect(data, dict, location)
    algebra = load_algebra(_field(obj, "algebra", location), f"{location}.algebra")
    raw = _expect(_field(obj, "weights", location), dict, f"{location}.weights")
    weights = []
    for i in range(len(algebra.atoms)):
        key = str(i)
        if key not in raw:
            raise InputError(f"missing weight for atom {i}", f"{location}.weights")
        weights.append(parse_fraction(raw[key], f"{location}.weights.{key}"))
    mode_raw = obj.get("mode", Mode.SIGMA.value)
    try:
        mode = Mode(mode_raw)
    except ValueError:
        raise InputError(f"unknown mode {mode_raw!r}", f"{location}.mode") from None
    try:
        return Measure(algebra, tuple(weights), mode)
    except ValueError as exc:
        raise InputError(str(exc), f"{location}.weights") from None


# -- simple functions and functional tables ---------------------------------


def dump_simple_function(s: SimpleFunction) -> dict:
    terms = s.terms or tuple(
        (v, atom) for atom, v in zip(s.algebra.atoms, s.values) if v
    )
    return {
        "terms": [[dump_fraction(a), _mask_to_indices(m)] for a, m in terms]
    }


def load_simple_function(data: Any, algebra: Algebra, location: str = "$") -> SimpleFunction:
    obj = _expect(data, dict, location)
    raw_terms = _expect(_field(obj, "terms", location), list, f"{location}.terms")
    terms = []
    for i, item in enumerate(raw_terms):
        pair = _expect(item, list, f"{location}.terms[{i}]")
        if len(pair) != 2:
            raise InputError("term must be [coefficient, indices]", f"{location}.terms[{i}]")
        coeff = parse_fraction(pair[0], f"{location}.terms[{i}][0]")
        mask = _indices_to_mask(pair[1], algebra.ground, f"{location}.terms[{i}][1]")
        terms.append((coeff, mask))
    try:
        return SimpleFunction.from_terms(algebra, terms)
    except FinprobError as exc:
        raise InputError(str(exc), f"{location}.terms") from None


def dump_functional_table(f: Functional) -> dict:
    return {
        "family": [dump_simple_function(s) for s in f.test_family],
        "values": [dump_fraction(f.value(s)) for s in f.test_family],
    }


def load_functional_table(data: Any, algebra: Algebra, location: str = "$") -> Functional:
    obj = _expect(data, dict, location)
    raw_family = _expect(_field(obj, "family", location), list, f"{location}.family")
    raw_values = _expect(_field(obj, "values", location), list, f"{location}.values")
    if len(raw_family) != len(raw_values):
        raise InputError("family and values must have equal length", location)
    pairs = []
    for i, (fn_data, val) in enumerate(zip(raw_family, raw_values)):
        fn = load_simple_function(fn_data, algebra, f"{location}.family[{i}]")
        pairs.append((fn, parse_fraction(val, f"{location}.values[{i}]")))
    return Functional.from_table(algebra, pairs)


# -- slabs -------------------------------------------------------------------


def dump_slab(slab: Slab) -> dict:
    points = slab.algebra.ground.points
    lower = [slab.lower[slab.algebra.atom_of_point(p)] for p in points]
    upper = [slab.upper[slab.algebra.atom_of_point(p)] for p in points]
    return {
        "lower": [dump_fraction(v) for v in lower],
        "upper": [dump_fraction(v) for v in upper],
    }


def load_slab(data: Any, algebra: Algebra, location: str = "$") -> Slab:
    obj = _expect(data, dict, location)
    vectors = {}
    for key in ("lower", "upper"):
        raw = _expect(_field(obj, key, location), list, f"{location}.{key}")
        if len(raw) != algebra.ground.size:
            raise InputError("one value per ground point required", f"{location}.{key}")
        values = [parse_fraction(v, f"{location}.{key}[{i}]") for i, v in enumerate(raw)]
        atom_values = []
        for atom in algebra.atoms:
            seen = {values[i] for i in range(algebra.ground.size) if atom >> i & 1}
            if len(seen) != 1:
                raise InputError(
                    f"{key} bound not constant on an atom", f"{location}.{key}"
                )
            atom_values.append(seen.pop())
        vectors[key] = tuple(atom_values)
    try:
        return Slab(algebra, vectors["lower"], vectors["upper"])
    except ValueError as exc:
        raise InputError(str(exc), location) from None


# -- metric spaces and simplex points ----------------------------------------


def dump_metric(space: FiniteMetricSpace) -> dict:
    return {
        "points": list(space.points),
        "dist": [[dump_fraction(v) for v in row] for row in space.dist],
    }


def load_metric(data: Any, location: str = "$.metric") -> FiniteMetricSpace:
    obj = _expect(data, dict, location)
    points = _expect(_field(obj, "points", location), list, f"{location}.points")
    rows = _expect(_field(obj, "dist", location), list, f"{location}.dist")
    dist = tuple(
        tuple(
            parse_fraction(v, f"{location}.dist[{i}][{j}]")
            for j, v in enumerate(_expect(row, list, f"{location}.dist[{i}]"))
        )
        for i, row in enumerate(rows)
    )
    try:
        return FiniteMetricSpace(tuple(points), dist)
    except ValueError as exc:
        raise InputError(str(exc), location) from None


def dump_simplex(p: SimplexPoint) -> dict:
    return {
        "labels": list(p.labels),
        "weights": [dump_fraction(w) for w in p.weights],
    }


def load_simplex(data: Any, location: str = "$", labels=None) -> SimplexPoint:
    if isinstance(data, list) and labels is not None:
        weights = [parse_fraction(v, f"{location}[{i}]") for i, v in enumerate(data)]
        try:
            return SimplexPoint(tuple(labels), tuple(weights))
        except ValueError as exc:
            raise InputError(str(exc), location) from None
    obj = _expect(data, dict, location)
    raw_labels = _expect(_field(obj, "labels", location), list, f"{location}.labels")
    raw_weights = _expect(_field(obj, "weights", location), list, f"{location}.weights")
    weights = [
        parse_fraction(v, f"{location}.weights[{i}]") for i, v in enumerate(raw_weights)
    ]
    try:
        return SimplexPoint(tuple(raw_labels), tuple(weights))
    except ValueError as exc:
        raise InputError(str(exc), location) from None


# -- arrows and cones ---------------------------------------------------------


def dump_arrow(arrow: Arrow) -> dict:
    return {
        "targets": list(arrow.targets),
        "rows": {
            point: [dump_fraction(w) for w in arrow.at(point).weights]
            for point in arrow.source.ground.points
        },
    }


def load_arrow(data: Any, source: Algebra, location: str = "$") -> Arrow:
    obj = _expect(data, dict, location)
    targets = _expect(_field(obj, "targets", location), list, f"{location}.targets")
    rows_raw = _expect(_field(obj, "rows", location), dict, f"{location}.rows")
    by_point = {}
    for point in source.ground.points:
        if point not in rows_raw:
            raise InputError(f"missing row for point {point!r}", f"{location}.rows")
        by_point[point] = load_simplex(
            rows_raw[point], f"{location}.rows.{point}", labels=targets
        )
    try:
        return Arrow.from_point_rows(source, tuple(targets), by_point)
    except FinprobError as exc:
        raise InputError(str(exc), f"{location}.rows") from None


def dump_cone(cone: Cone) -> list:
    return [
        [dump_arrow(arrow), dump_simplex(point)] for arrow, point in cone.legs
    ]


def load_cone(data: Any, source: Algebra, location: str = "$.cone") -> Cone:
    raw = _expect(data, list, location)
    legs = []
    for i, item in enumerate(raw):
        pair = _expect(item, list, f"{location}[{i}]")
        if len(pair) != 2:
            raise InputError("cone leg must be [arrow, point]", f"{location}[{i}]")
        arrow = load_arrow(pair[0], source, f"{location}[{i}][0]")
        point = load_simplex(pair[1], f"{location}[{i}][1]", labels=arrow.targets)
        legs.append((arrow, point))
    try:
        return Cone("input", tuple(legs))
    except ValueError as exc:
        raise InputError(str(exc), location) from None


# -- top-level instance files --------------------------------------------------


def loads_instance(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}", "$") from None
    obj = _expect(data, dict, "$")
    version = obj.get("format", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise InputError(f"unsupported format version {version!r}", "$.format")
    return obj


def dumps_canonical(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"
