"""Simple functions and exact integration against finite measures.

On a finite algebra every measurable [0, 1]-valued function is simple, so one
type carries both roles.  A simple function is canonicalized to its
atom-indexed value vector; the original term list, when given, is kept only
for representation-independence checks and is ignored by equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError, RangeError
from .measure import Measure, evaluate
from .setalg import Algebra

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class SimpleFunction:
    """A [0, 1]-valued function constant on the atoms of its algebra."""

    algebra: Algebra
    values: tuple[Fraction, ...]  # one value per atom, canonical form
    terms: tuple[tuple[Fraction, int], ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        values = tuple(Fraction(v) for v in self.values)
        object.__setattr__(self, "values", values)
        object.__setattr__(
            self, "terms", tuple((Fraction(a), m) for a, m in self.terms)
        )
        if len(values) != len(self.algebra.atoms):
            raise ValueError("one value per atom required")
        for v in values:
            if v < 0 or v > 1:
                raise RangeError(f"simple function value {v} outside [0, 1]")

    @classmethod
    def from_terms(
        cls, algebra: Algebra, terms: Iterable[tuple[Fraction, int]]
    ) -> "SimpleFunction":
        """Build ``sum a_k * 1_{A_k}`` from coefficient/member pairs."""
        terms = tuple((Fraction(a), m) for a, m in terms)
        for a, m in terms:
            if a < 0 or a > 1:
                raise RangeError(f"term coefficient {a} outside [0, 1]")
            algebra.check_member(m)
        values = tuple(
            sum((a for a, m in terms if m & atom), ZERO) for atom in algebra.atoms
        )
        return cls(algebra, values, terms)

    @classmethod
    def from_point_values(
        cls, algebra: Algebra, values: Sequence[Fraction]
    ) -> "SimpleFunction":
        """Build from per-point values, which must be constant on atoms."""
        if len(values) != algebra.ground.size:
            raise DomainError("one value per ground point required")
        vals = [Fraction(v) for v in values]
        atom_values = []
        for atom in algebra.atoms:
            seen = {vals[i] for i in range(algebra.ground.size) if atom >> i & 1}
            if len(seen) != 1:
                raise DomainError(
                    f"values not constant on atom {algebra.ground.labels_of(atom)}"
                )
            atom_values.append(seen.pop())
        return cls(algebra, tuple(atom_values))

    @classmethod
    def indicator(cls, algebra: Algebra, mask: int) -> "SimpleFunction":
        algebra.check_member(mask)
        return cls(
            algebra, tuple(ONE if atom & mask else ZERO for atom in algebra.atoms)
        )

    @classmethod
    def constant(cls, algebra: Algebra, value: Fraction) -> "SimpleFunction":
        return cls(algebra, (Fraction(value),) * len(algebra.atoms))

    def value_at(self, label: str) -> Fraction:
        return self.values[self.algebra.atom_of_point(label)]

    @property
    def point_values(self) -> tuple[Fraction, ...]:
        """Values per ground point, in canonical point order."""
        by_point = [ZERO] * self.algebra.ground.size
        for atom, v in zip(self.algebra.atoms, self.values):
            for i in range(self.algebra.ground.size):
                if atom >> i & 1:
                    by_point[i] = v
        return tuple(by_point)

    def __le__(self, other: "SimpleFunction") -> bool:
        self._check_same_algebra(other)
        return all(a <= b for a, b in zip(self.values, other.values))

    def add(self, other: "SimpleFunction") -> "SimpleFunction":
        """Pointwise sum; the result must stay within [0, 1]."""
        self._check_same_algebra(other)
        return SimpleFunction(
            self.algebra, tuple(a + b for a, b in zip(self.values, other.values))
        )

    def subtract(self, other: "SimpleFunction") -> "SimpleFunction":
        """Pointwise difference for ``other <= self``."""
        self._check_same_algebra(other)
        return SimpleFunction(
            self.algebra, tuple(a - b for a, b in zip(self.values, other.values))
        )

    def scale(self, r: Fraction) -> "SimpleFunction":
        r = Fraction(r)
        if r < 0 or r > 1:
            raise RangeError(f"scalar {r} outside [0, 1]")
        return SimpleFunction(self.algebra, tuple(r * v for v in self.values))

    def restrict(self, mask: int) -> "SimpleFunction":
        """Pointwise product with the indicator of a member."""
        self.algebra.check_member(mask)
        return SimpleFunction(
            self.algebra,
            tuple(v if atom & mask else ZERO for atom, v in zip(self.algebra.atoms, self.values)),
        )

    def _check_same_algebra(self, other: "SimpleFunction") -> None:
        if other.algebra != self.algebra:
            raise DomainError("simple functions live on different algebras")


def canonicalize(s: SimpleFunction) -> SimpleFunction:
    """The atom-indexed form; equal pointwise functions canonicalize equally."""
    return SimpleFunction(s.algebra, s.values)


def simple_integral(p: Measure, s: SimpleFunction) -> Fraction:
    """Exact integral of a simple function: sum of atom value times weight.

    When the function carries an explicit term list, the term-by-term sum
    ``sum a_k * P(A_k)`` is computed as well and must agree (representation
    independence).
    """
    if s.algebra != p.algebra:
        raise DomainError("function and measure live on different algebras")
    total = sum((v * w for v, w in zip(s.values, p.weights)), ZERO)
    if s.terms:
        by_terms = sum((a * evaluate(p, m) for a, m in s.terms), ZERO)
        if by_terms != total:
            raise AssertionError(
                f"representation dependence: terms give {by_terms}, atoms give {total}"
            )
    return total


def integral(p: Measure, f: SimpleFunction) -> Fraction:
    """Supremum of simple-function integrals below ``f``.

    On a finite algebra the supremum is attained at ``f`` itself, so the
    value coincides with :func:`simple_integral`; both are computed and
    compared.
    """
    attained = simple_integral(p, canonicalize(f))
    direct = simple_integral(p, f)
    if attained != direct:
        raise AssertionError("supremum not attained at the function itself")
    return attained


def _grid_values(limit: Fraction, max_denominator: int) -> list[Fraction]:
    values = {ZERO, limit}
    for q in range(1, max_denominator + 1):
        for num in range(q + 1):
            v = Fraction(num, q)
            if v <= limit:
                values.add(v)
    return sorted(values)


@dataclass(frozen=True)
class ClauseResult:
    name: str
    passed: int
    failed: int
    witnesses: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass(frozen=True)
class IntegralPropertiesReport:
    clauses: tuple[ClauseResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.clauses)

    def clause(self, name: str) -> ClauseResult:
        for c in self.clauses:
            if c.name == name:
                return c
        raise KeyError(name)


def check_integral_properties(
    p: Measure,
    fns: Sequence[SimpleFunction],
    grid_denominator: int = 4,
    chain_length: int = 3,
) -> IntegralPropertiesReport:
    """Exact checks of the integral's additivity and continuity properties.

    Six clauses: agreement of the integral with the simple-function sum;
    monotonicity; coincidence of the supremum over minorants with the infimum
    over majorants (searched over a rational grid with denominators up to
    ``grid_denominator``, plus the function itself, where the extremum is
    attained); additivity of sums staying within [0, 1]; monotone limits of
    eventually constant increasing sequences; and finite decompositions
    standing in for countable sums with finitely many nonzero terms.
    """
    for f in fns:
        if f.algebra != p.algebra:
            raise DomainError("all functions must live on the measure's algebra")

    results = []

    def run(name, cases):
        passed, failed, witnesses = 0, 0, []
        for label, ok in cases:
            if ok:
                passed += 1
            else:
                failed += 1
                if len(witnesses) < 5:
                    witnesses.append(label)
        results.append(ClauseResult(name, passed, failed, tuple(witnesses)))

    # (i) the integral agrees with the simple-function sum
    run(
        "simple-agreement",
        [
            (f"fn#{i}", integral(p, f) == simple_integral(p, f))
            for i, f in enumerate(fns)
        ],
    )

    # (ii) monotonicity
    cases = []
    for (i, f), (j, g) in itertools.permutations(enumerate(fns), 2):
        if f <= g:
            cases.append((f"fn#{i}<=fn#{j}", integral(p, f) <= integral(p, g)))
    run("monotone", cases)

    # (iii) sup over minorants equals inf over majorants
    cases = []
    k = len(p.algebra.atoms)
    grid_cap = 3  # exhaustive grid search is exponential in the atom count
    for i, f in enumerate(fns):
        target = integral(p, f)
        if k > grid_cap:
            # the extremum is attained at f itself; grid search skipped
            cases.append((f"fn#{i}", target == simple_integral(p, f)))
            continue
        minorant_choices = [_grid_values(v, grid_denominator) for v in f.values]
        best_lower = max(
            simple_integral(p, SimpleFunction(p.algebra, combo))
            for combo in itertools.product(*minorant_choices)
        )
        majorant_choices = [
            [ONE - w for w in _grid_values(ONE - v, grid_denominator)]
            for v in f.values
        ]
        best_upper = min(
            simple_integral(p, SimpleFunction(p.algebra, combo))
            for combo in itertools.product(*majorant_choices)
        )
        cases.append((f"fn#{i}", best_lower == target == best_upper))
    run("sup-inf", cases)

    # (iv) additivity when the sum stays a [0, 1]-function
    cases = []
    for (i, f), (j, g) in itertools.combinations(enumerate(fns), 2):
        if all(a + b <= 1 for a, b in zip(f.values, g.values)):
            lhs = integral(p, f.add(g))
            cases.append((f"fn#{i}+fn#{j}", lhs == integral(p, f) + integral(p, g)))
    run("additive", cases)

    # (v) monotone limits, finite form: eventually constant increasing chains
    cases = []
    for i, f in enumerate(fns):
        chain = [f.scale(Fraction(step, chain_length)) for step in range(chain_length + 1)]
        chain.append(f)  # eventually constant at f
        values = [integral(p, g) for g in chain]
        increasing = all(a <= b for a, b in zip(values, values[1:]))
        cases.append((f"fn#{i}", increasing and values[-1] == integral(p, f)))
    run("monotone-limit", cases)

    # (vi) countable sums, finite form: finitely many nonzero terms
    cases = []
    for i, f in enumerate(fns):
        pieces = [f.restrict(atom) for atom in p.algebra.atoms]
        total = sum((integral(p, piece) for piece in pieces), ZERO)
        cases.append((f"fn#{i}", total == integral(p, f)))
    run("finite-series", cases)

    return IntegralPropertiesReport(tuple(results))
