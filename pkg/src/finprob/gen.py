"""Deterministic seeded generators for random test instances.

Every generator takes an explicit ``random.Random``; suites derive one
sub-generator per case from ``(seed, suite name, case index)`` so that case
outcomes never depend on execution order or worker count.  String seeding of
``random.Random`` is stable across runs and platforms.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .lipmetric import FiniteMetricSpace
from .measure import Measure, Mode
from .monad import MetaMeasure, SimplexPoint
from .integrate import SimpleFunction
from .setalg import Algebra, GroundSet, generate_algebra

ZERO = Fraction(0)
ONE = Fraction(1)


def rng_for(seed: int, *path: str) -> random.Random:
    return random.Random(f"{seed}/" + "/".join(path))


def random_ground(rng: random.Random, max_size: int, min_size: int = 1) -> GroundSet:
    n = rng.randint(min_size, max_size)
    return GroundSet(tuple(f"x{i}" for i in range(n)))


def random_algebra(rng: random.Random, ground: GroundSet) -> Algebra:
    style = rng.randrange(4)
    if style == 0:
        return Algebra.powerset(ground)
    if style == 1:
        return Algebra.trivial(ground)
    count = rng.randint(1, max(1, ground.size))
    generators = [rng.randrange(ground.full_mask + 1) for _ in range(count)]
    return generate_algebra(ground, generators)


def random_weights(rng: random.Random, k: int, max_denominator: int) -> tuple[Fraction, ...]:
    """Nonnegative rationals with denominators at most ``max_denominator``
    summing exactly to one, via a random composition of the denominator."""
    d = rng.randint(1, max_denominator)
    counts = [0] * k
    for _ in range(d):
        counts[rng.randrange(k)] += 1
    return tuple(Fraction(c, d) for c in counts)


def random_positive_weights(
    rng: random.Random, k: int, max_denominator: int
) -> tuple[Fraction, ...]:
    """As :func:`random_weights` but with every entry strictly positive."""
    d = rng.randint(k, max(k, max_denominator))
    counts = [1] * k
    for _ in range(d - k):
        counts[rng.randrange(k)] += 1
    return tuple(Fraction(c, d) for c in counts)


def random_measure(
    rng: random.Random,
    algebra: Algebra,
    max_denominator: int,
    mode: Mode = Mode.SIGMA,
) -> Measure:
    k = len(algebra.atoms)
    style = rng.randrange(8)
    if style == 0:  # forced edge case: all mass on one atom
        i = rng.randrange(k)
        return Measure(algebra, tuple(ONE if j == i else ZERO for j in range(k)), mode)
    if style == 1 and k <= max_denominator:  # forced edge case: uniform
        return Measure(algebra, (Fraction(1, k),) * k, mode)
    return Measure(algebra, random_weights(rng, k, max_denominator), mode)


def random_simple_function(
    rng: random.Random, algebra: Algebra, max_denominator: int
) -> SimpleFunction:
    values = []
    for _ in algebra.atoms:
        d = rng.randint(1, max_denominator)
        values.append(Fraction(rng.randint(0, d), d))
    return SimpleFunction(algebra, tuple(values))


def random_bounded_pair(
    rng: random.Random, algebra: Algebra, max_denominator: int
) -> tuple[SimpleFunction, SimpleFunction]:
    """Two simple functions whose pointwise sum stays within [0, 1]."""
    f = random_simple_function(rng, algebra, max_denominator)
    g_values = []
    for v in f.values:
        d = rng.randint(1, max_denominator)
        cap = int((ONE - v) * d)
        g_values.append(Fraction(rng.randint(0, cap), d))
    return f, SimpleFunction(algebra, tuple(g_values))


def random_term_list(
    rng: random.Random, algebra: Algebra, max_denominator: int, max_terms: int = 4
) -> SimpleFunction:
    """A simple function built from explicit coefficient/member terms."""
    members = list(algebra.members)
    terms = []
    budget = ONE
    for _ in range(rng.randint(1, max_terms)):
        if budget <= 0:
            break
        d = rng.randint(1, max_denominator)
        cap = int(budget * d)
        if cap == 0:
            continue
        coeff = Fraction(rng.randint(0, cap), d)
        terms.append((coeff, rng.choice(members)))
        budget -= coeff  # pointwise sums are at most the coefficient sum
    if not terms:
        terms = [(ZERO, 0)]
    return SimpleFunction.from_terms(algebra, terms)


def random_premeasurable_map(
    rng: random.Random, dom: Algebra
) -> tuple[dict[str, str], Algebra]:
    """A random map constant on the domain's atoms (hence premeasurable into
    any codomain algebra) together with a random codomain algebra."""
    m = rng.randint(1, 3)
    cod_ground = GroundSet(tuple(f"y{i}" for i in range(m)))
    mapping = {}
    for atom in dom.atoms:
        target = rng.choice(cod_ground.points)
        for label in dom.ground.labels_of(atom):
            mapping[label] = target
    return mapping, random_algebra(rng, cod_ground)


def random_meta_measure(
    rng: random.Random,
    algebra: Algebra,
    max_denominator: int,
    mode: Mode = Mode.SIGMA,
    max_support: int = 3,
) -> MetaMeasure:
    count = rng.randint(1, max_support)
    support: list[Measure] = []
    for _ in range(4 * count):
        p = random_measure(rng, algebra, max_denominator, mode)
        if p not in support:
            support.append(p)
        if len(support) == count:
            break
    weights = random_positive_weights(rng, len(support), max_denominator)
    return MetaMeasure(tuple(support), weights)


def random_simplex_point(
    rng: random.Random, labels: Sequence[str], max_denominator: int
) -> SimplexPoint:
    return SimplexPoint(tuple(labels), random_weights(rng, len(labels), max_denominator))


def random_metric(
    rng: random.Random, size: int, max_denominator: int
) -> FiniteMetricSpace:
    """A random finite metric space with exact rational distances.

    Mixes the discrete metric, metrics with all distances in [1/2, 1] (where
    the triangle inequality is automatic), and shortest-path repairs of
    arbitrary positive symmetric matrices.
    """
    points = tuple(f"m{i}" for i in range(size))
    style = rng.randrange(3)
    dist = [[ZERO] * size for _ in range(size)]
    if style == 0:
        for i in range(size):
            for j in range(i + 1, size):
                dist[i][j] = dist[j][i] = ONE
    elif style == 1:
        for i in range(size):
            for j in range(i + 1, size):
                d = rng.randint(2, max(2, max_denominator))
                v = Fraction(rng.randint((d + 1) // 2, d), d)
                dist[i][j] = dist[j][i] = v
    else:
        for i in range(size):
            for j in range(i + 1, size):
                d = rng.randint(1, max_denominator)
                v = Fraction(rng.randint(1, 2 * d), d)
                dist[i][j] = dist[j][i] = v
        for k in range(size):  # shortest-path closure keeps exactness
            for i in range(size):
                for j in range(size):
                    via = dist[i][k] + dist[k][j]
                    if i != j and via < dist[i][j]:
                        dist[i][j] = via
    return FiniteMetricSpace(points, tuple(tuple(row) for row in dist))


def discrete_metric(labels: Sequence[str]) -> FiniteMetricSpace:
    points = tuple(labels)
    n = len(points)
    dist = tuple(
        tuple(ZERO if i == j else ONE for j in range(n)) for i in range(n)
    )
    return FiniteMetricSpace(points, dist)
