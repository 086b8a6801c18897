"""Walkthrough: the probability monad and its laws, verified exactly.

A space maps to its measures; points map to Dirac measures (unit); a
finitely supported measure on measures averages to a plain measure (mult).
"""

from fractions import Fraction as F

from finprob import (
    Algebra,
    GroundSet,
    Measure,
    MetaMeasure,
    Mode,
    check_monad_laws,
    dirac,
    map_simplex,
    mult,
    SimplexPoint,
)

ground = GroundSet(("0", "1"))
algebra = Algebra.powerset(ground)

# The functor action on plain distributions pushes weights along preimages.
p = SimplexPoint(("0", "1", "2"), (F(1, 6), F(1, 3), F(1, 2)))
print("fold 0,1 -> 0 and 2 -> 1:", map_simplex(p, {"0": "0", "1": "0", "2": "1"}, ("0", "1")).weights)

# mult averages a measure on measures.
coin = Measure(algebra, (F(1, 2), F(1, 2)))
biased = Measure(algebra, (F(1, 4), F(3, 4)))
meta = MetaMeasure((coin, biased), (F(1, 3), F(2, 3)))
print("average of coin (1/3) and biased (2/3):", mult(meta).weights)

# Left unit: the point mass at P averages back to P.
print("left unit:", mult(MetaMeasure.point_mass(biased)) == biased)

# Right unit: P decomposed into Diracs averages back to P.
diracs = MetaMeasure(
    (dirac("0", algebra), dirac("1", algebra)), biased.weights
)
print("right unit:", mult(diracs) == biased)

# The full seeded law suite, in both the sigma-additive and the
# finitely-additive mode (identical numbers, distinct semantics).
for mode in (Mode.SIGMA, Mode.FINITELY_ADDITIVE):
    report = check_monad_laws(None, cases=200, seed=0, mode=mode)
    print(f"{mode.value}: all laws exact on 200 cases ->", report.ok)
