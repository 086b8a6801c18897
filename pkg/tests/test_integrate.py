"""Simple functions and the exact integral."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from finprob import (
    Algebra,
    DomainError,
    GroundSet,
    RangeError,
    SimpleFunction,
    canonicalize,
    check_integral_properties,
    integral,
    simple_integral,
    uniform,
)
from finprob import gen


def two_point_powerset():
    return Algebra.powerset(GroundSet(("0", "1")))


def test_canonicalize_constant():
    alg = two_point_powerset()
    s = SimpleFunction.from_terms(alg, [(F(1, 2), alg.ground.full_mask)])
    assert canonicalize(s).values == (F(1, 2), F(1, 2))


def test_canonicalize_overlapping_terms():
    alg = two_point_powerset()
    s = SimpleFunction.from_terms(
        alg, [(F(1, 2), alg.ground.mask_of(["0"])), (F(1, 2), alg.ground.full_mask)]
    )
    assert canonicalize(s).values == (F(1), F(1, 2))


def test_canonicalize_is_representation_independent():
    alg = two_point_powerset()
    a = SimpleFunction.from_terms(alg, [(F(1, 2), alg.ground.full_mask)])
    b = SimpleFunction.from_terms(
        alg,
        [(F(1, 2), alg.ground.mask_of(["0"])), (F(1, 2), alg.ground.mask_of(["1"]))],
    )
    assert canonicalize(a) == canonicalize(b)
    assert a == b  # term lists are ignored by equality


def test_canonicalize_rejects_overflowing_sum():
    alg = two_point_powerset()
    with pytest.raises(RangeError):
        SimpleFunction.from_terms(
            alg, [(F(3, 4), alg.ground.full_mask), (F(1, 2), alg.ground.full_mask)]
        )


def test_integral_of_one_is_one():
    g = GroundSet(("0", "1", "2"))
    p = uniform(Algebra.powerset(g))
    one = SimpleFunction.constant(p.algebra, F(1))
    assert simple_integral(p, one) == 1
    assert integral(p, one) == 1


def test_integral_term_sum():
    g = GroundSet(("0", "1", "2"))
    p = uniform(Algebra.powerset(g))
    s = SimpleFunction.from_terms(
        p.algebra, [(F(1, 2), g.mask_of(["0"])), (F(1, 2), g.mask_of(["0", "1"]))]
    )
    assert simple_integral(p, s) == F(1, 2)


def test_integral_of_indicator_is_measure():
    g = GroundSet(("0", "1", "2"))
    rng = gen.rng_for(3, "indicator")
    p = gen.random_measure(rng, Algebra.powerset(g), 12)
    for member in p.algebra.members:
        ind = SimpleFunction.indicator(p.algebra, member)
        assert simple_integral(p, ind) == p(member)


def test_integral_attained_value():
    alg = two_point_powerset()
    p = uniform(alg)
    f = SimpleFunction(alg, (F(1), F(1, 2)))
    assert integral(p, f) == F(3, 4)


def test_integral_of_zero():
    alg = two_point_powerset()
    assert integral(uniform(alg), SimpleFunction.constant(alg, F(0))) == 0


def test_integral_requires_matching_algebra():
    p = uniform(two_point_powerset())
    other = Algebra.powerset(GroundSet(("a", "b")))
    with pytest.raises(DomainError):
        simple_integral(p, SimpleFunction.constant(other, F(1)))


@st.composite
def measure_and_terms(draw):
    seed = draw(st.integers(0, 10**9))
    rng = gen.rng_for(seed, "hyp-int")
    algebra = gen.random_algebra(rng, gen.random_ground(rng, 4))
    p = gen.random_measure(rng, algebra, 8)
    s = gen.random_term_list(rng, algebra, 8)
    return p, s


@settings(max_examples=80, deadline=None)
@given(measure_and_terms())
def test_representation_independence(data):
    p, s = data
    # integrating the term list and the canonical form agree exactly
    assert simple_integral(p, s) == simple_integral(p, canonicalize(s))


@settings(max_examples=80, deadline=None)
@given(measure_and_terms(), st.integers(0, 6), st.integers(1, 6))
def test_rational_homogeneity(data, num, den):
    p, s = data
    r = F(num, den)
    if r > 1:
        r = 1 / r
    assert simple_integral(p, s.scale(r)) == r * simple_integral(p, s)


@settings(max_examples=80, deadline=None)
@given(measure_and_terms())
def test_integral_equals_simple_integral(data):
    p, s = data
    assert integral(p, s) == simple_integral(p, s)


def test_properties_complement_additivity():
    g = GroundSet(("0", "1", "2"))
    rng = gen.rng_for(11, "complement")
    p = gen.random_measure(rng, Algebra.powerset(g), 12)
    a = g.mask_of(["0", "2"])
    f = SimpleFunction.indicator(p.algebra, a)
    fc = SimpleFunction.indicator(p.algebra, g.full_mask ^ a)
    report = check_integral_properties(p, [f, fc])
    assert report.ok
    assert simple_integral(p, f.add(fc)) == 1


def test_properties_worked_sum():
    g = GroundSet(("0", "1", "2"))
    p = uniform(Algebra.powerset(g))
    f = SimpleFunction.constant(p.algebra, F(1, 3))
    s = SimpleFunction.from_terms(p.algebra, [(F(1, 3), g.mask_of(["0"]))])
    assert simple_integral(p, f.add(s)) == F(4, 9)
    assert simple_integral(p, f) + simple_integral(p, s) == F(4, 9)
    assert check_integral_properties(p, [f, s]).ok


def test_properties_monotone_from_zero():
    alg = two_point_powerset()
    p = uniform(alg)
    zero = SimpleFunction.constant(alg, F(0))
    g = SimpleFunction(alg, (F(1, 3), F(2, 3)))
    report = check_integral_properties(p, [zero, g])
    assert report.clause("monotone").ok
    assert integral(p, zero) <= integral(p, g)


def test_sup_inf_clause_searches_grid():
    g = GroundSet(("0", "1", "2"))
    rng = gen.rng_for(5, "supinf")
    p = gen.random_measure(rng, Algebra.powerset(g), 4)
    f = gen.random_simple_function(rng, p.algebra, 4)
    report = check_integral_properties(p, [f], grid_denominator=4)
    assert report.clause("sup-inf").ok


def test_properties_report_structure():
    alg = two_point_powerset()
    p = uniform(alg)
    report = check_integral_properties(p, [SimpleFunction.constant(alg, F(1, 2))])
    names = [c.name for c in report.clauses]
    assert names == [
        "simple-agreement",
        "monotone",
        "sup-inf",
        "additive",
        "monotone-limit",
        "finite-series",
    ]
