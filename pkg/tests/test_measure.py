"""Measures and charges: evaluation, Dirac, pushforward, validation."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from finprob import (
    Algebra,
    DomainError,
    GroundSet,
    Measure,
    Mode,
    PreconditionError,
    dirac,
    evaluate,
    generate_algebra,
    pushforward,
    uniform,
    validate,
    validate_weights,
)
from finprob import gen


def test_evaluate_atom_sum():
    g = GroundSet(("0", "1", "2"))
    p = uniform(Algebra.powerset(g))
    assert evaluate(p, g.mask_of(["0", "1"])) == F(2, 3)


def test_evaluate_normalization_and_empty():
    g = GroundSet(("0", "1", "2"))
    p = Measure(Algebra.powerset(g), (F(1, 2), F(1, 3), F(1, 6)))
    assert evaluate(p, g.full_mask) == 1
    assert evaluate(p, 0) == 0


def test_evaluate_rejects_non_member():
    g = GroundSet(("0", "1", "2"))
    alg = generate_algebra(g, [g.mask_of(["0"])])
    p = dirac("1", alg)
    with pytest.raises(DomainError):
        evaluate(p, g.mask_of(["1"]))


def test_dirac_on_powerset():
    g = GroundSet(("a", "b"))
    alg = Algebra.powerset(g)
    d = dirac("a", alg)
    assert evaluate(d, g.mask_of(["a"])) == 1
    assert evaluate(d, g.mask_of(["b"])) == 0
    assert evaluate(d, g.full_mask) == 1


def test_dirac_on_coarse_algebra():
    g = GroundSet(("0", "1", "2"))
    alg = generate_algebra(g, [g.mask_of(["0"])])
    assert evaluate(dirac("1", alg), g.mask_of(["1", "2"])) == 1


def test_dirac_rejects_unknown_point():
    g = GroundSet(("a", "b"))
    with pytest.raises(DomainError):
        dirac("z", Algebra.powerset(g))


def test_pushforward_constant_map_is_dirac():
    g = GroundSet(("0", "1", "2"))
    p = uniform(Algebra.powerset(g))
    cod = Algebra.powerset(GroundSet(("y",)))
    q = pushforward(p, {x: "y" for x in g.points}, cod)
    assert q.weights == (F(1),)


def test_pushforward_identity():
    g = GroundSet(("0", "1", "2"))
    p = Measure(Algebra.powerset(g), (F(1, 2), F(1, 4), F(1, 4)))
    assert pushforward(p, {x: x for x in g.points}, p.algebra) == p


def test_pushforward_preimage_sums():
    g = GroundSet(("0", "1", "2"))
    p = uniform(Algebra.powerset(g))
    cod = Algebra.powerset(GroundSet(("0", "1")))
    q = pushforward(p, {"0": "0", "1": "0", "2": "1"}, cod)
    assert q.weights == (F(2, 3), F(1, 3))


def test_pushforward_preserves_mode():
    g = GroundSet(("0", "1"))
    p = uniform(Algebra.powerset(g), Mode.FINITELY_ADDITIVE)
    q = pushforward(p, {"0": "0", "1": "0"}, p.algebra)
    assert q.mode is Mode.FINITELY_ADDITIVE


def test_pushforward_requires_premeasurable_map():
    g = GroundSet(("0", "1", "2"))
    dom = generate_algebra(g, [g.mask_of(["0", "1"])])
    cod = Algebra.powerset(GroundSet(("a", "b")))
    p = dirac("0", dom)
    with pytest.raises(PreconditionError):
        pushforward(p, {"0": "a", "1": "b", "2": "b"}, cod)


def test_validate_uniform_measure():
    g = GroundSet(("0", "1", "2"))
    assert validate(uniform(Algebra.powerset(g))).ok


def test_validate_weights_normalization_diagnostic():
    g = GroundSet(("0", "1"))
    report = validate_weights(Algebra.powerset(g), (F(1, 2), F(2, 5)))
    assert not report.ok
    assert any(d.startswith("normalization") for d in report.diagnostics)


def test_validate_allows_zero_weights():
    g = GroundSet(("0", "1", "2"))
    p = Measure(Algebra.powerset(g), (F(1, 2), F(1, 2), F(0)))
    assert validate(p).ok


def test_measure_constructor_rejects_bad_weights():
    g = GroundSet(("0", "1"))
    alg = Algebra.powerset(g)
    with pytest.raises(ValueError):
        Measure(alg, (F(1, 2), F(1, 3)))
    with pytest.raises(ValueError):
        Measure(alg, (F(3, 2), F(-1, 2)))


@st.composite
def algebra_and_measure(draw):
    rng_seed = draw(st.integers(0, 10**9))
    rng = gen.rng_for(rng_seed, "hyp-measure")
    algebra = gen.random_algebra(rng, gen.random_ground(rng, 5))
    return algebra, gen.random_measure(rng, algebra, 12)


@settings(max_examples=60, deadline=None)
@given(algebra_and_measure(), st.integers(0, 10**9))
def test_pushforward_functoriality(data, salt):
    algebra, p = data
    rng = gen.rng_for(salt, "hyp-functorial")
    f, mid = gen.random_premeasurable_map(rng, algebra)
    g_map, cod = gen.random_premeasurable_map(rng, mid)
    composed = {x: g_map[f[x]] for x in algebra.ground.points}
    assert pushforward(pushforward(p, f, mid), g_map, cod) == pushforward(
        p, composed, cod
    )


@settings(max_examples=60, deadline=None)
@given(algebra_and_measure(), st.integers(0, 10**9))
def test_unit_naturality(data, salt):
    algebra, _ = data
    rng = gen.rng_for(salt, "hyp-unit-nat")
    f, cod = gen.random_premeasurable_map(rng, algebra)
    for x in algebra.ground.points:
        assert pushforward(dirac(x, algebra), f, cod) == dirac(f[x], cod)


def test_additivity_exhaustive_small():
    """Finite additivity over every disjoint decomposition into members."""
    import itertools

    g = GroundSet(("0", "1", "2", "3", "4"))
    rng = gen.rng_for(7, "additivity")
    algebra = gen.random_algebra(rng, g)
    p = gen.random_measure(rng, algebra, 12)
    members = list(algebra.members)
    for r in (2, 3):
        for combo in itertools.combinations(members, r):
            union, disjoint = 0, True
            for m in combo:
                if union & m:
                    disjoint = False
                    break
                union |= m
            if disjoint:
                assert evaluate(p, union) == sum(evaluate(p, m) for m in combo)
