"""The bounded Lipschitz distance: exact LP, subset maximum, and the
non-expansiveness of the monad structure maps."""

import itertools
from fractions import Fraction as F

import pytest

from finprob import (
    FiniteMetricSpace,
    LipschitzFunction,
    SimplexPoint,
    bl_distance_lp,
    bl_distance_subsets,
    check_bl_monad_nonexpansive,
    check_lipschitz_criterion_equivalence,
    check_simplex_lipschitz,
    discrete_space,
    total_variation,
)
from finprob.lipmetric import average_simplex, bl_distance_lp_witness, simplex_grid
from finprob import gen


def grid_oracle(p, q, space, max_denominator=8):
    """Brute force over all feasible test functions on a rational grid.

    A lower bound on the distance that is tight whenever the LP optimum has
    grid coordinates; test-only, never the production path.
    """
    n = space.size
    values = sorted(
        {F(num, den) for den in range(1, max_denominator + 1) for num in range(den + 1)}
    )
    diff = [a - b for a, b in zip(p.weights, q.weights)]
    best = F(0)
    for combo in itertools.product(values, repeat=n):
        ok = all(
            abs(combo[i] - combo[j]) <= space.dist[i][j]
            for i in range(n)
            for j in range(i + 1, n)
        )
        if ok:
            total = sum(f * d for f, d in zip(combo, diff))
            best = max(best, abs(total))
    return best


def test_identical_points_have_zero_distance():
    labels = ("a", "b")
    p = SimplexPoint(labels, (F(1, 3), F(2, 3)))
    assert bl_distance_lp(p, p, discrete_space(labels)) == 0
    assert bl_distance_subsets(p, p) == 0


def test_discrete_metric_separates_point_masses():
    labels = ("a", "b")
    p = SimplexPoint.point_mass(labels, "a")
    q = SimplexPoint.point_mass(labels, "b")
    assert bl_distance_lp(p, q, discrete_space(labels)) == 1
    assert bl_distance_subsets(p, q) == 1


def test_half_distance_two_point_space():
    labels = ("a", "b")
    space = FiniteMetricSpace(labels, ((F(0), F(1, 2)), (F(1, 2), F(0))))
    p = SimplexPoint.point_mass(labels, "a")
    q = SimplexPoint.point_mass(labels, "b")
    value = bl_distance_lp(p, q, space)
    assert value == F(1, 2)
    assert value == grid_oracle(p, q, space)


def test_lp_matches_grid_oracle_on_random_small_instances():
    for case in range(15):
        rng = gen.rng_for(31, "lp-oracle", str(case))
        space = gen.random_metric(rng, rng.randint(2, 3), 4)
        p = gen.random_simplex_point(rng, space.points, 4)
        q = gen.random_simplex_point(rng, space.points, 4)
        by_lp = bl_distance_lp(p, q, space)
        by_grid = grid_oracle(p, q, space, max_denominator=8)
        assert by_grid <= by_lp
        if by_lp.denominator <= 8:
            assert by_lp == by_grid


def test_lp_witness_is_optimal_lipschitz_function():
    labels = ("a", "b", "c")
    space = discrete_space(labels)
    rng = gen.rng_for(37, "witness")
    p = gen.random_simplex_point(rng, labels, 10)
    q = gen.random_simplex_point(rng, labels, 10)
    value, witness = bl_distance_lp_witness(p, q, space)
    assert isinstance(witness, LipschitzFunction)
    attained = abs(
        sum(f * (a - b) for f, a, b in zip(witness.values, p.weights, q.weights))
    )
    assert attained == value


def test_subsets_worked_pair():
    labels = ("a", "b", "c")
    p = SimplexPoint(labels, (F(1, 2), F(1, 2), F(0)))
    q = SimplexPoint(labels, (F(1, 3), F(1, 3), F(1, 3)))
    # oracle: enumerate all 8 subsets explicitly
    diffs = [a - b for a, b in zip(p.weights, q.weights)]
    by_enum = max(
        abs(sum((diffs[i] for i in range(3) if mask >> i & 1), F(0)))
        for mask in range(8)
    )
    assert by_enum == F(1, 3)
    assert bl_distance_subsets(p, q) == F(1, 3)
    assert bl_distance_lp(p, q, discrete_space(labels)) == F(1, 3)


def test_discrete_identity_on_random_pairs():
    for case in range(30):
        rng = gen.rng_for(41, "identity", str(case))
        labels = tuple(f"x{i}" for i in range(rng.randint(2, 6)))
        p = gen.random_simplex_point(rng, labels, 12)
        q = gen.random_simplex_point(rng, labels, 12)
        lp = bl_distance_lp(p, q, discrete_space(labels))
        assert lp == bl_distance_subsets(p, q) == total_variation(p, q)


def test_bl_is_a_metric_on_random_triples():
    for case in range(10):
        rng = gen.rng_for(43, "metric-axioms", str(case))
        space = gen.random_metric(rng, rng.randint(2, 4), 6)
        pts = [gen.random_simplex_point(rng, space.points, 6) for _ in range(3)]
        d01 = bl_distance_lp(pts[0], pts[1], space)
        d10 = bl_distance_lp(pts[1], pts[0], space)
        d12 = bl_distance_lp(pts[1], pts[2], space)
        d02 = bl_distance_lp(pts[0], pts[2], space)
        assert d01 == d10
        assert d02 <= d01 + d12
        assert (d01 == 0) == (pts[0] == pts[1])


def test_metric_monotonicity():
    labels = ("a", "b", "c")
    small = FiniteMetricSpace(
        labels,
        (
            (F(0), F(1, 2), F(1, 2)),
            (F(1, 2), F(0), F(1, 2)),
            (F(1, 2), F(1, 2), F(0)),
        ),
    )
    large = discrete_space(labels)
    rng = gen.rng_for(47, "monotone")
    for _ in range(10):
        p = gen.random_simplex_point(rng, labels, 8)
        q = gen.random_simplex_point(rng, labels, 8)
        assert bl_distance_lp(p, q, small) <= bl_distance_lp(p, q, large)


def test_constant_map_is_lipschitz():
    labels = ("u", "v")
    space = discrete_space(("x", "y"))
    image = SimplexPoint(labels, (F(1, 2), F(1, 2)))
    result = check_simplex_lipschitz({"x": image, "y": image}, space)
    assert result.is_lipschitz and result.verdicts_agree


def test_close_points_with_far_images_fail():
    labels = ("u", "v")
    space = FiniteMetricSpace(("x", "y"), ((F(0), F(1, 10)), (F(1, 10), F(0))))
    f = {
        "x": SimplexPoint(labels, (F(1), F(0))),
        "y": SimplexPoint(labels, (F(0), F(1))),
    }
    result = check_simplex_lipschitz(f, space)
    assert not result.is_lipschitz
    assert result.witness is not None


def test_vertex_embedding_of_discrete_space_is_lipschitz():
    points = ("x", "y", "z")
    space = discrete_space(points)
    labels = ("u", "v", "w")
    f = {p: SimplexPoint.point_mass(labels, labels[i]) for i, p in enumerate(points)}
    result = check_simplex_lipschitz(f, space)
    assert result.is_lipschitz and result.verdicts_agree


def test_equivalence_sweep_small():
    sweep = check_lipschitz_criterion_equivalence(
        max_space=2, max_labels=2, max_denominator=2, lp_samples=20, seed=0
    )
    assert sweep.ok
    assert sweep.instances > 0


def test_simplex_grid_enumeration():
    pts = simplex_grid(("a", "b"), 3)
    weights = {p.weights for p in pts}
    assert (F(1), F(0)) in weights
    assert (F(1, 3), F(2, 3)) in weights
    assert (F(1, 2), F(1, 2)) in weights
    assert all(sum(w) == 1 for w in weights)


def test_nonexpansive_unit_tight_on_discrete():
    space = discrete_space(("a", "b", "c"))
    report = check_bl_monad_nonexpansive(space, cases=5, seed=0)
    assert report.ok
    assert report.unit_tight == report.unit_cases  # distances are all 1


def test_nonexpansive_small_distance():
    labels = ("a", "b")
    space = FiniteMetricSpace(labels, ((F(0), F(1, 3)), (F(1, 3), F(0))))
    pa = SimplexPoint.point_mass(labels, "a")
    pb = SimplexPoint.point_mass(labels, "b")
    assert bl_distance_lp(pa, pb, space) == F(1, 3)
    report = check_bl_monad_nonexpansive(space, cases=5, seed=0)
    assert report.ok


def test_nonexpansive_equal_meta_measures():
    labels = ("a", "b")
    space = discrete_space(labels)
    p = SimplexPoint(labels, (F(1, 4), F(3, 4)))
    assert average_simplex([p, p], [F(1, 2), F(1, 2)]) == p
    assert bl_distance_lp(p, p, space) == 0


def test_nonexpansive_random_spaces():
    report = check_bl_monad_nonexpansive(None, cases=15, seed=0, max_size=5)
    assert report.ok


def test_metric_space_validation():
    with pytest.raises(ValueError):
        FiniteMetricSpace(("a", "b"), ((F(0), F(1)), (F(2), F(0))))  # asymmetric
    with pytest.raises(ValueError):
        FiniteMetricSpace(("a", "b"), ((F(0), F(0)), (F(0), F(0))))  # zero distance
    with pytest.raises(ValueError):
        FiniteMetricSpace(
            ("a", "b", "c"),
            (
                (F(0), F(1), F(3)),
                (F(1), F(0), F(1)),
                (F(3), F(1), F(0)),
            ),
        )  # triangle violation


def test_lipschitz_function_validation():
    space = FiniteMetricSpace(("a", "b"), ((F(0), F(1, 4)), (F(1, 4), F(0))))
    LipschitzFunction(space, (F(1, 2), F(1, 4)))
    with pytest.raises(ValueError):
        LipschitzFunction(space, (F(1), F(0)))  # slope 4 over distance 1/4
