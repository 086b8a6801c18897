"""JSON wire formats: round trips, canonical order, input diagnostics."""

from fractions import Fraction as F

import pytest

from finprob import (
    Algebra,
    Functional,
    GroundSet,
    InputError,
    Measure,
    Mode,
    SimpleFunction,
    SimplexPoint,
    Slab,
    binary_arrow,
    cone_of_measure,
    discrete_space,
    generate_algebra,
    indicator_family,
    simple_integral,
    uniform,
)
from finprob import serialize


def test_fraction_round_trip():
    for v in (F(0), F(1), F(-3, 7), F(22, 12)):
        assert serialize.parse_fraction(serialize.dump_fraction(v), "$") == v


def test_fraction_rejects_garbage():
    with pytest.raises(InputError):
        serialize.parse_fraction("1/0", "$.x")
    with pytest.raises(InputError):
        serialize.parse_fraction([1, 2], "$.x")


def test_algebra_round_trip_and_canonical_order():
    g = GroundSet(("0", "1", "2"))
    alg = generate_algebra(g, [g.mask_of(["0"])])
    data = serialize.dump_algebra(alg)
    assert data["family"] == [[], [0], [1, 2], [0, 1, 2]]
    assert serialize.load_algebra(data) == alg


def test_algebra_load_rejects_non_closed_family():
    data = {"points": ["0", "1"], "family": [[], [0], [0, 1]]}
    with pytest.raises(InputError) as err:
        serialize.load_algebra(data)
    assert "complement" in str(err.value)


def test_measure_round_trip():
    g = GroundSet(("0", "1", "2"))
    p = Measure(
        Algebra.powerset(g), (F(1, 2), F(1, 3), F(1, 6)), Mode.FINITELY_ADDITIVE
    )
    data = serialize.dump_measure(p)
    assert data["mode"] == "finitely_additive"
    assert serialize.load_measure(data) == p
    assert serialize.load_measure(data).mode is Mode.FINITELY_ADDITIVE


def test_measure_load_rejects_bad_weights():
    g = GroundSet(("0", "1"))
    data = serialize.dump_measure(uniform(Algebra.powerset(g)))
    data["weights"]["0"] = "2/3"
    with pytest.raises(InputError) as err:
        serialize.load_measure(data)
    assert "$.weights" in str(err.value)


def test_simple_function_round_trip():
    g = GroundSet(("0", "1", "2"))
    alg = Algebra.powerset(g)
    s = SimpleFunction.from_terms(
        alg, [(F(1, 2), g.mask_of(["0"])), (F(1, 4), g.mask_of(["0", "1"]))]
    )
    data = serialize.dump_simple_function(s)
    assert serialize.load_simple_function(data, alg) == s


def test_functional_table_round_trip():
    g = GroundSet(("0", "1"))
    alg = Algebra.powerset(g)
    p = uniform(alg)
    pairs = [
        (SimpleFunction.indicator(alg, m), simple_integral(p, SimpleFunction.indicator(alg, m)))
        for m in alg.members
    ]
    functional = Functional.from_table(alg, pairs)
    data = serialize.dump_functional_table(functional)
    loaded = serialize.load_functional_table(data, alg)
    for s, _ in pairs:
        assert loaded.value(s) == functional.value(s)


def test_slab_round_trip():
    g = GroundSet(("0", "1"))
    alg = generate_algebra(g, [1])
    slab = Slab(alg, (F(0), F(1, 4)), (F(1, 2), F(1)))
    data = serialize.dump_slab(slab)
    assert serialize.load_slab(data, alg) == slab


def test_slab_load_requires_atom_constant_bounds():
    g = GroundSet(("0", "1"))
    alg = Algebra.trivial(g)
    data = {"lower": ["0/1", "1/4"], "upper": ["1/1", "1/1"]}
    with pytest.raises(InputError):
        serialize.load_slab(data, alg)


def test_metric_round_trip():
    space = discrete_space(("a", "b", "c"))
    assert serialize.load_metric(serialize.dump_metric(space)) == space


def test_simplex_round_trip():
    p = SimplexPoint(("a", "b"), (F(1, 3), F(2, 3)))
    assert serialize.load_simplex(serialize.dump_simplex(p)) == p
    assert serialize.load_simplex(["1/3", "2/3"], labels=("a", "b")) == p


def test_arrow_and_cone_round_trip():
    g = GroundSet(("0", "1"))
    alg = Algebra.powerset(g)
    arrow = binary_arrow(SimpleFunction.indicator(alg, g.mask_of(["0"])))
    data = serialize.dump_arrow(arrow)
    assert serialize.load_arrow(data, alg) == arrow

    cone = cone_of_measure(uniform(alg), indicator_family(alg))
    cone_data = serialize.dump_cone(cone)
    loaded = serialize.load_cone(cone_data, alg)
    assert loaded.legs == cone.legs


def test_instance_format_version_enforced():
    with pytest.raises(InputError):
        serialize.loads_instance('{"format": 2}')
    with pytest.raises(InputError):
        serialize.loads_instance("not json")
    assert serialize.loads_instance('{"format": 1, "x": 3}')["x"] == 3


def test_canonical_dump_is_stable():
    payload = {"b": [F(1, 2).denominator], "a": 1}
    assert serialize.dumps_canonical(payload) == serialize.dumps_canonical(
        {"a": 1, "b": [2]}
    )
