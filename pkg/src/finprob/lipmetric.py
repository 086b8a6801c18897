"""The bounded Lipschitz distance on finite simplices, exactly.

Two independent routes are provided: an exact rational linear program over
1-Lipschitz [0, 1]-valued test functions (any metric), and the subset-maximum
formula valid under the discrete metric, where the distance also equals half
the L1 distance.  Non-expansiveness of the monad unit and multiplication is
checked against these exact distances.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DomainError
from .linprog import maximize
from .monad import SimplexPoint

ZERO = Fraction(0)
ONE = Fraction(1)

#: Largest label set for which subset enumeration is offered (2**n additions).
SUBSET_ENUMERATION_CAP = 20


@dataclass(frozen=True)
class FiniteMetricSpace:
    """A finite metric space with an exact rational distance matrix."""

    points: tuple[str, ...]
    dist: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        points = tuple(str(p) for p in self.points)
        dist = tuple(tuple(Fraction(v) for v in row) for row in self.dist)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "dist", dist)
        n = len(points)
        if len(set(points)) != n:
            raise ValueError("metric space labels must be distinct")
        if len(dist) != n or any(len(row) != n for row in dist):
            raise ValueError("distance matrix must be square over the points")
        for i in range(n):
            if dist[i][i] != 0:
                raise ValueError(f"dist({points[i]}, {points[i]}) must be 0")
            for j in range(n):
                if i != j and dist[i][j] <= 0:
                    raise ValueError("distinct points must be at positive distance")
                if dist[i][j] != dist[j][i]:
                    raise ValueError("distance matrix must be symmetric")
        for i, j, k in itertools.permutations(range(n), 3) if n >= 3 else ():
            if dist[i][j] > dist[i][k] + dist[k][j]:
                raise ValueError(
                    f"triangle inequality fails at ({points[i]}, {points[j]}, {points[k]})"
                )

    @property
    def size(self) -> int:
        return len(self.points)

    def d(self, x: str, y: str) -> Fraction:
        return self.dist[self.points.index(x)][self.points.index(y)]

    def is_discrete(self) -> bool:
        return all(
            self.dist[i][j] == 1
            for i in range(self.size)
            for j in range(self.size)
            if i != j
        )


@dataclass(frozen=True)
class LipschitzFunction:
    """A 1-Lipschitz function into [0, 1] on a finite metric space."""

    space: FiniteMetricSpace
    values: tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(Fraction(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if len(values) != self.space.size:
            raise ValueError("one value per point required")
        for v in values:
            if v < 0 or v > 1:
                raise ValueError(f"value {v} outside [0, 1]")
        for i in range(self.space.size):
            for j in range(i + 1, self.space.size):
                if abs(values[i] - values[j]) > self.space.dist[i][j]:
                    raise ValueError(
                        f"not 1-Lipschitz at ({self.space.points[i]}, {self.space.points[j]})"
                    )


def _check_indexing(p: SimplexPoint, q: SimplexPoint, points: tuple[str, ...]) -> None:
    if p.labels != points or q.labels != points:
        raise DomainError("simplex points must be indexed by the metric's points")


def _one_sided_lp(
    diff: Sequence[Fraction], space: FiniteMetricSpace
) -> tuple[Fraction, tuple[Fraction, ...]]:
    n = space.size
    rows, rhs = [], []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            row = [ZERO] * n
            row[i], row[j] = ONE, -ONE
            rows.append(row)
            rhs.append(space.dist[i][j])
    for i in range(n):
        row = [ZERO] * n
        row[i] = ONE
        rows.append(row)
        rhs.append(ONE)
    result = maximize(diff, rows, rhs)
    return result.value, result.solution


def bl_distance_lp(
    p: SimplexPoint, q: SimplexPoint, space: FiniteMetricSpace
) -> Fraction:
    """Bounded Lipschitz distance: the exact optimum of the test-function LP.

    Maximizes ``sum f(x) (p_x - q_x)`` over 1-Lipschitz ``f`` into [0, 1];
    both orientations are solved and the larger optimum returned.
    """
    return bl_distance_lp_witness(p, q, space)[0]


def bl_distance_lp_witness(
    p: SimplexPoint, q: SimplexPoint, space: FiniteMetricSpace
) -> tuple[Fraction, LipschitzFunction]:
    """As :func:`bl_distance_lp`, also returning an optimal test function."""
    _check_indexing(p, q, space.points)
    diff = [a - b for a, b in zip(p.weights, q.weights)]
    forward, f_fwd = _one_sided_lp(diff, space)
    backward, f_bwd = _one_sided_lp([-v for v in diff], space)
    if forward >= backward:
        return forward, LipschitzFunction(space, f_fwd)
    return backward, LipschitzFunction(space, f_bwd)


def bl_distance_subsets(p: SimplexPoint, q: SimplexPoint) -> Fraction:
    """Subset-maximum form of the distance under the discrete metric:
    the largest absolute gap between subset sums."""
    if p.labels != q.labels:
        raise DomainError("simplex points must share one index set")
    n = len(p.labels)
    if n > SUBSET_ENUMERATION_CAP:
        raise DomainError(
            f"subset enumeration capped at {SUBSET_ENUMERATION_CAP} labels; use the LP"
        )
    diff = [a - b for a, b in zip(p.weights, q.weights)]
    best = ZERO
    for mask in range(1 << n):
        total = sum((diff[i] for i in range(n) if mask >> i & 1), ZERO)
        if abs(total) > best:
            best = abs(total)
    return best


def total_variation(p: SimplexPoint, q: SimplexPoint) -> Fraction:
    """Half the L1 distance between the weight vectors."""
    if p.labels != q.labels:
        raise DomainError("simplex points must share one index set")
    return sum((abs(a - b) for a, b in zip(p.weights, q.weights)), ZERO) / 2


@dataclass(frozen=True)
class SimplexLipschitzCheck:
    is_lipschitz: bool
    direct_verdict: bool
    subset_verdict: bool
    witness: tuple | None

    @property
    def verdicts_agree(self) -> bool:
        return self.direct_verdict == self.subset_verdict


def check_simplex_lipschitz(
    f: Mapping[str, SimplexPoint],
    space: FiniteMetricSpace,
    method: str = "lp",
) -> SimplexLipschitzCheck:
    """Whether a map into a discrete-metric simplex is 1-Lipschitz.

    Two criteria are evaluated independently and must agree: the direct
    definition (the simplex distance between images is at most the distance
    between arguments, with the simplex distance computed by ``method``) and
    the subset-sum criterion (every subset sum of components is 1-Lipschitz
    into [0, 1]).  On failure the witness is the offending pair and, for the
    subset route, the offending subset.
    """
    if method not in ("lp", "subsets"):
        raise DomainError(f"unknown method {method!r}")
    points = space.points
    images = []
    labels = None
    for x in points:
        if x not in f:
            raise DomainError(f"map is not total: missing {x!r}")
        img = f[x]
        if labels is None:
            labels = img.labels
        elif img.labels != labels:
            raise DomainError("images must share one simplex index set")
        images.append(img)
    assert labels is not None
    target = discrete_space(labels)

    direct, direct_witness = True, None
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if method == "lp":
                gap = bl_distance_lp(images[i], images[j], target)
            else:
                gap = bl_distance_subsets(images[i], images[j])
            if gap > space.dist[i][j]:
                direct, direct_witness = False, (points[i], points[j], gap)
                break
        if not direct:
            break

    subset, subset_witness = True, None
    m = len(labels)
    for mask in range(1 << m):
        sums = [
            sum((img.weights[k] for k in range(m) if mask >> k & 1), ZERO)
            for img in images
        ]
        for i in range(len(points)):
            for j in range(i + 1, len(points)):
                if abs(sums[i] - sums[j]) > space.dist[i][j]:
                    chosen = tuple(labels[k] for k in range(m) if mask >> k & 1)
                    subset, subset_witness = False, (points[i], points[j], chosen)
                    break
            if not subset:
                break
        if not subset:
            break

    if direct != subset:
        raise AssertionError(
            f"criteria disagree: direct={direct} subset={subset} "
            f"({direct_witness} vs {subset_witness})"
        )
    return SimplexLipschitzCheck(direct, direct, subset, direct_witness or subset_witness)


def discrete_space(labels: Sequence[str]) -> FiniteMetricSpace:
    labels = tuple(labels)
    n = len(labels)
    dist = tuple(tuple(ZERO if i == j else ONE for j in range(n)) for i in range(n))
    return FiniteMetricSpace(labels, dist)


def average_simplex(
    support: Sequence[SimplexPoint], weights: Sequence[Fraction]
) -> SimplexPoint:
    """Convex combination of simplex points: the monad multiplication on a
    finitely supported meta-distribution."""
    if not support:
        raise ValueError("empty support")
    labels = support[0].labels
    for s in support[1:]:
        if s.labels != labels:
            raise DomainError("support points must share one index set")
    acc = [ZERO] * len(labels)
    for w, s in zip(weights, support):
        for i, v in enumerate(s.weights):
            acc[i] += Fraction(w) * v
    return SimplexPoint(labels, tuple(acc))


@dataclass(frozen=True)
class NonexpansiveReport:
    unit_cases: int
    unit_failures: tuple[str, ...]
    unit_tight: int
    mult_cases: int
    mult_failures: tuple[str, ...]
    law_failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not (self.unit_failures or self.mult_failures or self.law_failures)


def check_bl_monad_nonexpansive(
    space: FiniteMetricSpace | None = None,
    cases: int = 50,
    seed: int = 0,
    max_denominator: int = 6,
    max_size: int = 6,
) -> NonexpansiveReport:
    """Non-expansiveness of the monad structure maps, exactly.

    Unit: the distance between two point masses never exceeds the distance
    between the points (and equals it under the discrete metric).  Mult: the
    distance between averaged meta-distributions is bounded by the bounded
    Lipschitz distance between the meta-distributions themselves, computed
    over the finite support with exact pairwise base distances.  The monad
    unit and associativity laws are re-asserted on the same instances.  With
    no space given, each case draws its own random metric space within
    ``max_size``.
    """
    from . import gen  # deferred: gen builds on this module's types

    unit_failures: list[str] = []
    mult_failures: list[str] = []
    law_failures: list[str] = []
    unit_tight = 0
    unit_cases = 0
    mult_cases = 0

    for case in range(cases):
        rng = gen.rng_for(seed, "nonexpansive", str(case))
        current = space or gen.random_metric(
            rng, rng.randint(1, max_size), max_denominator
        )
        labels = current.points

        for i in range(current.size):
            for j in range(i + 1, current.size):
                unit_cases += 1
                px = SimplexPoint.point_mass(labels, labels[i])
                py = SimplexPoint.point_mass(labels, labels[j])
                d = bl_distance_lp(px, py, current)
                bound = current.dist[i][j]
                if d > bound:
                    unit_failures.append(
                        f"unit pair ({labels[i]},{labels[j]}): {d} > {bound}"
                    )
                if d == min(bound, ONE):
                    unit_tight += 1
                if current.is_discrete() and d != bound:
                    unit_failures.append(
                        f"discrete equality fails at ({labels[i]},{labels[j]}): {d} != {bound}"
                    )

        k1, k2 = rng.randint(1, 3), rng.randint(1, 3)
        support1 = _distinct_points(rng, labels, k1, max_denominator)
        support2 = _distinct_points(rng, labels, k2, max_denominator)
        w1 = gen.random_positive_weights(rng, len(support1), max_denominator)
        w2 = gen.random_positive_weights(rng, len(support2), max_denominator)

        mult_cases += 1
        merged: list[SimplexPoint] = []
        for s in support1 + support2:
            if s not in merged:
                merged.append(s)
        base = [
            [
                ZERO if a == b else bl_distance_lp(merged[a], merged[b], current)
                for b in range(len(merged))
            ]
            for a in range(len(merged))
        ]
        if len(merged) == 1:
            meta_distance = ZERO
        else:
            meta_labels = tuple(f"s{a}" for a in range(len(merged)))
            meta_space = FiniteMetricSpace(
                meta_labels, tuple(tuple(row) for row in base)
            )
            ext1 = _extend_weights(merged, support1, w1)
            ext2 = _extend_weights(merged, support2, w2)
            meta_distance = bl_distance_lp(
                SimplexPoint(meta_labels, ext1),
                SimplexPoint(meta_labels, ext2),
                meta_space,
            )
        lhs = bl_distance_lp(
            average_simplex(support1, w1), average_simplex(support2, w2), current
        )
        if lhs > meta_distance:
            mult_failures.append(f"case {case}: d(mult,mult)={lhs} > {meta_distance}")

        # monad laws re-asserted in the metric setting
        p = gen.random_simplex_point(rng, labels, max_denominator)
        if average_simplex([p], [ONE]) != p:
            law_failures.append(f"case {case}: left unit fails at {p.weights}")
        diracs = [SimplexPoint.point_mass(labels, x) for x in labels]
        if average_simplex(diracs, p.weights) != p:
            law_failures.append(f"case {case}: right unit fails at {p.weights}")
        inner = [average_simplex(support1, w1), average_simplex(support2, w2)]
        outer = gen.random_positive_weights(rng, 2, max_denominator)
        left = average_simplex(inner, outer)
        flat_support = list(support1) + list(support2)
        flat_weights = [outer[0] * w for w in w1] + [outer[1] * w for w in w2]
        right = average_simplex(flat_support, flat_weights)
        if left != right:
            law_failures.append(f"case {case}: associativity fails")

    return NonexpansiveReport(
        unit_cases,
        tuple(unit_failures),
        unit_tight,
        mult_cases,
        tuple(mult_failures),
        tuple(law_failures),
    )


def simplex_grid(labels: Sequence[str], max_denominator: int) -> tuple[SimplexPoint, ...]:
    """All simplex points whose weights have denominators at most the bound."""
    labels = tuple(labels)
    values = sorted(
        {
            Fraction(num, den)
            for den in range(1, max_denominator + 1)
            for num in range(den + 1)
        }
    )
    points: list[SimplexPoint] = []

    def build(prefix: list[Fraction], remaining: Fraction, slots: int) -> None:
        if slots == 1:
            if remaining in values:
                points.append(SimplexPoint(labels, tuple(prefix + [remaining])))
            return
        for v in values:
            if v <= remaining:
                build(prefix + [v], remaining - v, slots - 1)

    build([], ONE, len(labels))
    return tuple(points)


@dataclass(frozen=True)
class EquivalenceSweep:
    instances: int
    disagreements: tuple[str, ...]
    lp_spot_checks: int

    @property
    def ok(self) -> bool:
        return not self.disagreements


def check_lipschitz_criterion_equivalence(
    max_space: int = 3,
    max_labels: int = 3,
    max_denominator: int = 3,
    lp_samples: int = 200,
    seed: int = 0,
) -> EquivalenceSweep:
    """Exhaustive agreement of the two 1-Lipschitz criteria for maps into a
    discrete-metric simplex.

    Enumerates every metric space up to ``max_space`` points with distances
    on the rational grid, every map into every simplex grid up to
    ``max_labels`` labels, and compares the direct distance criterion with
    the subset-sum criterion.  The direct side uses the subset-maximum form
    of the distance for the sweep; a seeded sample of instances is recomputed
    with the linear program as an independent spot check.
    """
    import random as _random

    rng = _random.Random(f"{seed}/lipschitz-sweep")
    grid_distances = sorted(
        {
            Fraction(num, den)
            for den in range(1, max_denominator + 1)
            for num in range(1, 2 * den + 1)
        }
    )
    disagreements: list[str] = []
    instances = 0
    lp_spot_checks = 0
    sampled: list[tuple] = []

    for m in range(1, max_labels + 1):
        labels = tuple(f"t{i}" for i in range(m))
        grid = simplex_grid(labels, max_denominator)
        subset_diffs: dict[tuple[int, int], tuple] = {}
        for a, p in enumerate(grid):
            sums_p = [
                sum((p.weights[i] for i in range(m) if mask >> i & 1), ZERO)
                for mask in range(1 << m)
            ]
            for b, q in enumerate(grid):
                sums_q = [
                    sum((q.weights[i] for i in range(m) if mask >> i & 1), ZERO)
                    for mask in range(1 << m)
                ]
                diffs = tuple(abs(x - y) for x, y in zip(sums_p, sums_q))
                subset_diffs[(a, b)] = (max(diffs), diffs)
        for n in range(1, max_space + 1):
            for space in _metric_grid(n, grid_distances):
                for assignment in itertools.product(range(len(grid)), repeat=n):
                    instances += 1
                    direct_ok = True
                    subset_ok = True
                    for i in range(n):
                        for j in range(i + 1, n):
                            bound = space.dist[i][j]
                            gap, diffs = subset_diffs[(assignment[i], assignment[j])]
                            if gap > bound:
                                direct_ok = False
                            if any(d > bound for d in diffs):
                                subset_ok = False
                    if direct_ok != subset_ok:
                        disagreements.append(
                            f"n={n} m={m} dist={space.dist} map={assignment}"
                        )
                    if rng.random() < 0.0005:
                        sampled.append(
                            (space, tuple(grid[a] for a in assignment), direct_ok)
                        )

    rng.shuffle(sampled)
    for space, assignment, verdict in sampled[:lp_samples]:
        f = dict(zip(space.points, assignment))
        check = check_simplex_lipschitz(f, space, method="lp")
        lp_spot_checks += 1
        if check.is_lipschitz != verdict:
            disagreements.append(
                f"lp spot check disagrees on dist={space.dist} map={assignment}"
            )

    return EquivalenceSweep(instances, tuple(disagreements), lp_spot_checks)


def _metric_grid(n: int, distances: Sequence[Fraction]):
    """All metric spaces on ``n`` points with the given candidate distances."""
    points = tuple(f"x{i}" for i in range(n))
    if n == 1:
        yield FiniteMetricSpace(points, ((ZERO,),))
        return
    pair_count = n * (n - 1) // 2
    pairs = list(itertools.combinations(range(n), 2))
    for combo in itertools.product(distances, repeat=pair_count):
        dist = [[ZERO] * n for _ in range(n)]
        for (i, j), v in zip(pairs, combo):
            dist[i][j] = dist[j][i] = v
        ok = True
        for i, j, k in itertools.permutations(range(n), 3):
            if dist[i][j] > dist[i][k] + dist[k][j]:
                ok = False
                break
        if ok:
            yield FiniteMetricSpace(points, tuple(tuple(row) for row in dist))


def _distinct_points(rng, labels, count, max_denominator):
    from . import gen

    out: list[SimplexPoint] = []
    for _ in range(6 * count):
        p = gen.random_simplex_point(rng, labels, max_denominator)
        if p not in out:
            out.append(p)
        if len(out) == count:
            break
    return out


def _extend_weights(merged, support, weights):
    totals = {s: ZERO for s in merged}
    for w, s in zip(weights, support):
        totals[s] += w
    return tuple(totals[s] for s in merged)
