"""Walkthrough: the bounded Lipschitz distance between distributions.

The distance is the best discrimination achievable by 1-Lipschitz [0,1]
test functions, computed exactly by rational linear programming.  Under the
discrete metric it collapses to the subset maximum, which is half the L1
distance; the monad unit and multiplication are non-expansive for it.
"""

from fractions import Fraction as F

from finprob import (
    FiniteMetricSpace,
    SimplexPoint,
    bl_distance_lp,
    bl_distance_subsets,
    check_bl_monad_nonexpansive,
    check_simplex_lipschitz,
    discrete_space,
    total_variation,
)
from finprob.lipmetric import bl_distance_lp_witness

labels = ("a", "b", "c")
p = SimplexPoint(labels, (F(1, 2), F(1, 2), F(0)))
q = SimplexPoint(labels, (F(1, 3), F(1, 3), F(1, 3)))

space = discrete_space(labels)
value, witness = bl_distance_lp_witness(p, q, space)
print("LP distance:", value)
print("optimal test function:", witness.values)
print("subset maximum:", bl_distance_subsets(p, q))
print("half L1:", total_variation(p, q))

# With a finer metric the test functions are more constrained and the
# distance shrinks.
close = FiniteMetricSpace(
    labels,
    (
        (F(0), F(1, 5), F(1, 5)),
        (F(1, 5), F(0), F(1, 5)),
        (F(1, 5), F(1, 5), F(0)),
    ),
)
print("\nsame pair at distance 1/5:", bl_distance_lp(p, q, close))

# Point masses are exactly as far apart as their points (capped at one).
pa = SimplexPoint.point_mass(labels, "a")
pb = SimplexPoint.point_mass(labels, "b")
print("d(point mass a, point mass b) under 1/5 metric:", bl_distance_lp(pa, pb, close))

# A map into the simplex is 1-Lipschitz exactly when all its subset sums
# are; both criteria are evaluated independently.
f = {x: SimplexPoint.point_mass(labels, x) for x in labels}
result = check_simplex_lipschitz(f, space)
print("\nvertex embedding 1-Lipschitz:", result.is_lipschitz,
      "(criteria agree:", result.verdicts_agree, ")")

# Unit and mult never increase distances; on a discrete space the unit
# inequality is tight.
report = check_bl_monad_nonexpansive(space, cases=20, seed=0)
print("non-expansiveness on", report.unit_cases, "unit pairs and",
      report.mult_cases, "meta cases:", report.ok)
