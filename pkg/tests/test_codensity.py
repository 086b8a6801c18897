"""Arrows, cones, naturality, and the measure/cone round trip."""

from fractions import Fraction as F

import pytest

from finprob import (
    Algebra,
    Cone,
    GroundSet,
    Measure,
    Mode,
    ReconstructionError,
    SimpleFunction,
    SimplexPoint,
    binary_arrow,
    check_cone_naturality,
    cone_of_measure,
    dirac,
    indicator_family,
    reconstruct_from_cone,
    small_index_sufficiency,
    uniform,
    verify_codensity_bijection,
)
from finprob.codensity import collapse_arrow
from finprob import gen


def powerset3():
    return Algebra.powerset(GroundSet(("0", "1", "2")))


def test_binary_arrow_of_one():
    alg = powerset3()
    arrow = binary_arrow(SimpleFunction.constant(alg, F(1)))
    for point in alg.ground.points:
        assert arrow.at(point).weights == (F(0), F(1))


def test_binary_arrow_of_zero():
    alg = powerset3()
    arrow = binary_arrow(SimpleFunction.constant(alg, F(0)))
    for point in alg.ground.points:
        assert arrow.at(point).weights == (F(1), F(0))


def test_binary_arrow_of_indicator():
    alg = powerset3()
    mask = alg.ground.mask_of(["0", "2"])
    arrow = binary_arrow(SimpleFunction.indicator(alg, mask))
    for i, point in enumerate(alg.ground.points):
        inside = bool(mask >> i & 1)
        assert arrow.at(point).weights == (F(0 if inside else 1), F(1 if inside else 0))
    assert arrow.component("1").values == SimpleFunction.indicator(alg, mask).values


def test_cone_legs_of_dirac_evaluate_the_arrow():
    alg = powerset3()
    family = indicator_family(alg)
    d = dirac("1", alg)
    cone = cone_of_measure(d, family)
    for arrow, leg in cone.legs:
        assert leg == arrow.at("1")


def test_cone_legs_of_uniform_on_atom_arrow():
    alg = powerset3()
    targets = ("a", "b", "c")
    rows = tuple(SimplexPoint.point_mass(targets, targets[i]) for i in range(3))
    from finprob.codensity import Arrow

    arrow = Arrow(alg, targets, rows)
    cone = cone_of_measure(uniform(alg), (arrow,))
    assert cone.leg(arrow).weights == (F(1, 3), F(1, 3), F(1, 3))


def test_cone_leg_of_constant_arrow_is_the_constant():
    alg = powerset3()
    point = SimplexPoint(("x", "y"), (F(1, 4), F(3, 4)))
    from finprob.codensity import Arrow

    arrow = Arrow(alg, point.labels, (point,) * len(alg.atoms))
    rng = gen.rng_for(2, "const-arrow")
    for _ in range(5):
        p = gen.random_measure(rng, alg, 10)
        assert cone_of_measure(p, (arrow,)).leg(arrow) == point


def test_cone_of_measure_passes_naturality():
    alg = powerset3()
    family = indicator_family(alg)
    rng = gen.rng_for(5, "nat")
    for _ in range(10):
        p = gen.random_measure(rng, alg, 12)
        result = check_cone_naturality(cone_of_measure(p, family))
        assert result.ok
        assert result.triangles > 0


def test_perturbed_cone_fails_naturality():
    alg = powerset3()
    family = indicator_family(alg)
    p = Measure(alg, (F(1, 2), F(1, 4), F(1, 4)))
    cone = cone_of_measure(p, family)
    target = binary_arrow(
        SimpleFunction.indicator(alg, alg.ground.mask_of(["0"]))
    )
    eps = F(1, 100)
    legs = tuple(
        (
            arrow,
            SimplexPoint(leg.labels, (leg.weights[0] + eps, leg.weights[1] - eps))
            if arrow == target
            else leg,
        )
        for arrow, leg in cone.legs
    )
    result = check_cone_naturality(Cone("perturbed", legs))
    assert not result.ok
    assert result.witness is not None


def test_empty_cone_is_vacuously_natural():
    result = check_cone_naturality(Cone("empty", ()))
    assert result.ok
    assert result.triangles == 0


def test_reconstruct_round_trip():
    alg = powerset3()
    family = indicator_family(alg)
    p = Measure(alg, (F(1, 7), F(2, 7), F(4, 7)))
    assert reconstruct_from_cone(cone_of_measure(p, family)) == p


def test_reconstruct_dirac():
    alg = powerset3()
    family = indicator_family(alg)
    d = dirac("2", alg)
    assert reconstruct_from_cone(cone_of_measure(d, family)) == d


def test_reconstruct_perturbed_cone_raises():
    alg = powerset3()
    family = indicator_family(alg)
    p = uniform(alg)
    cone = cone_of_measure(p, family)
    eps = F(1, 100)
    legs = tuple(
        (
            arrow,
            SimplexPoint(leg.labels, (leg.weights[0] - eps, leg.weights[1] + eps))
            if arrow.targets == ("0", "1") and leg.weights[1] == F(1, 3)
            else leg,
        )
        for arrow, leg in cone.legs
    )
    with pytest.raises(ReconstructionError):
        reconstruct_from_cone(Cone("perturbed", legs))


def test_reconstruct_needs_atom_arrows():
    alg = powerset3()
    p = uniform(alg)
    cone = cone_of_measure(p, (collapse_arrow(alg),))
    with pytest.raises(ReconstructionError):
        reconstruct_from_cone(cone)


def test_uniqueness_distinct_measures_have_distinct_legs():
    alg = powerset3()
    family = indicator_family(alg)
    rng = gen.rng_for(13, "uniq")
    for _ in range(20):
        p = gen.random_measure(rng, alg, 12)
        q = gen.random_measure(rng, alg, 12)
        same_legs = cone_of_measure(p, family).legs == cone_of_measure(q, family).legs
        assert same_legs == (p == q)


def test_bijection_suite_both_modes():
    for mode in (Mode.SIGMA, Mode.FINITELY_ADDITIVE):
        report = verify_codensity_bijection(None, cases=40, seed=0, mode=mode)
        assert report.ok
        assert report.triangles > 0


def test_small_index_sufficiency_thresholds():
    report1 = small_index_sufficiency(None, 1, cases=20, seed=0)
    assert not report1.determined
    assert report1.ok
    report2 = small_index_sufficiency(None, 2, cases=20, seed=0)
    assert report2.determined and report2.ok
    report3 = small_index_sufficiency(None, 3, cases=20, seed=0)
    assert report3.determined and report3.ok


def test_sufficiency_rejects_bad_bound():
    with pytest.raises(Exception):
        small_index_sufficiency(None, 0, cases=1)


def test_arrow_requires_measurable_components():
    g = GroundSet(("0", "1"))
    coarse = Algebra.trivial(g)
    from finprob.codensity import Arrow

    with pytest.raises(Exception):
        Arrow.from_point_rows(
            coarse,
            ("a", "b"),
            {
                "0": SimplexPoint(("a", "b"), (F(1), F(0))),
                "1": SimplexPoint(("a", "b"), (F(0), F(1))),
            },
        )
