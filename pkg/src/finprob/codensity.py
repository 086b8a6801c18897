"""Executable form of the limit-cone characterization of the probability
monad: arrows from a space into finite simplices, cones over a declared
finite arrow family, integration legs, naturality checking, and the
round-trip bijection between measures and cones.

The full comma category of arrows is infinite; a cone here is declared over
a finite arrow family whose closure (binary arrows of every component, the
collapse arrow to the one-point simplex) is rich enough to replay the
uniqueness argument: legs on binary indicator arrows pin the measure down,
and naturality across label maps supplies normalization and finite
additivity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, PreconditionError, ReconstructionError
from .integrate import SimpleFunction, simple_integral
from .measure import Measure, Mode
from .monad import SimplexPoint, map_simplex
from .represent import Functional, reconstruct_charge, reconstruct_measure
from .setalg import Algebra

ZERO = Fraction(0)
ONE = Fraction(1)

BINARY_LABELS = ("0", "1")


@dataclass(frozen=True)
class Arrow:
    """A map from a space into the simplex on a finite label set, measurable
    componentwise: each label's weight function is constant on atoms."""

    source: Algebra
    targets: tuple[str, ...]
    rows: tuple[SimplexPoint, ...]  # one simplex point per atom of the source

    def __post_init__(self):
        targets = tuple(str(t) for t in self.targets)
        object.__setattr__(self, "targets", targets)
        object.__setattr__(self, "rows", tuple(self.rows))
        if len(set(targets)) != len(targets):
            raise ValueError("arrow target labels must be distinct")
        if len(self.rows) != len(self.source.atoms):
            raise ValueError("one simplex point per source atom required")
        for row in self.rows:
            if row.labels != targets:
                raise ValueError("arrow rows must be indexed by the target labels")

    @classmethod
    def from_point_rows(
        cls, source: Algebra, targets: Sequence[str], by_point: Mapping[str, SimplexPoint]
    ) -> "Arrow":
        """Build from per-point assignments, which must be constant on atoms."""
        rows = []
        for atom in source.atoms:
            labels = source.ground.labels_of(atom)
            first = by_point[labels[0]]
            for other in labels[1:]:
                if by_point[other] != first:
                    raise DomainError(
                        f"assignment not constant on atom {labels}"
                    )
            rows.append(first)
        return cls(source, tuple(targets), tuple(rows))

    def at(self, label: str) -> SimplexPoint:
        return self.rows[self.source.atom_of_point(label)]

    def component(self, target: str) -> SimpleFunction:
        """The weight of one target label, as a [0, 1]-valued function."""
        idx = self.targets.index(target)
        return SimpleFunction(self.source, tuple(row.weights[idx] for row in self.rows))

    def compose_label_map(
        self, mapping: Mapping[str, str], targets: Sequence[str]
    ) -> "Arrow":
        """Post-compose with the simplex map of a label function."""
        return Arrow(
            self.source,
            tuple(targets),
            tuple(map_simplex(row, mapping, targets) for row in self.rows),
        )


def binary_arrow(f: SimpleFunction) -> Arrow:
    """The arrow into the two-label simplex pairing ``f`` with its
    complement: a point maps to ``(1 - f(x), f(x))``."""
    rows = tuple(
        SimplexPoint(BINARY_LABELS, (ONE - v, v)) for v in f.values
    )
    return Arrow(f.algebra, BINARY_LABELS, rows)


def collapse_arrow(source: Algebra) -> Arrow:
    """The unique arrow into the one-point simplex."""
    row = SimplexPoint(("0",), (ONE,))
    return Arrow(source, ("0",), (row,) * len(source.atoms))


def indicator_family(source: Algebra) -> tuple[Arrow, ...]:
    """Binary arrows of every member indicator, plus the collapse arrow.

    This is the closure the reconstruction argument needs: it contains the
    binary arrow of each component of each of its arrows (components of
    binary indicator arrows are indicators again) and the collapsing arrow.
    """
    arrows = [collapse_arrow(source)]
    for member in source.members:
        arrows.append(binary_arrow(SimpleFunction.indicator(source, member)))
    return tuple(arrows)


def close_family(family: Iterable[Arrow]) -> tuple[Arrow, ...]:
    """Add the binary arrows of every component and the collapse arrow."""
    family = list(family)
    if not family:
        raise DomainError("arrow family must be nonempty")
    source = family[0].source
    closed: list[Arrow] = []
    seen = set()

    def push(arrow: Arrow) -> None:
        if arrow.source != source:
            raise DomainError("all arrows must share one source")
        if arrow not in seen:
            seen.add(arrow)
            closed.append(arrow)

    push(collapse_arrow(source))
    for arrow in family:
        push(arrow)
        for t in arrow.targets:
            push(binary_arrow(arrow.component(t)))
    return tuple(closed)


@dataclass(frozen=True)
class Cone:
    """A family of simplex points, one per declared arrow, required to
    commute with every label map between the arrows' targets."""

    apex: str
    legs: tuple[tuple[Arrow, SimplexPoint], ...]

    def __post_init__(self):
        object.__setattr__(self, "legs", tuple(self.legs))
        seen = set()
        for arrow, point in self.legs:
            if point.labels != arrow.targets:
                raise ValueError("leg must be indexed by its arrow's targets")
            if arrow in seen:
                raise ValueError("cone declares an arrow twice")
            seen.add(arrow)

    @property
    def family(self) -> tuple[Arrow, ...]:
        return tuple(arrow for arrow, _ in self.legs)

    def leg(self, arrow: Arrow) -> SimplexPoint:
        for candidate, point in self.legs:
            if candidate == arrow:
                return point
        raise DomainError("arrow not in the cone's declared family")


def cone_of_measure(p: Measure, family: Iterable[Arrow]) -> Cone:
    """The canonical cone of a measure: each leg integrates the arrow's
    components."""
    legs = []
    for arrow in family:
        if arrow.source != p.algebra:
            raise PreconditionError("arrow source differs from the measure's algebra")
        weights = tuple(
            simple_integral(p, arrow.component(t)) for t in arrow.targets
        )
        legs.append((arrow, SimplexPoint(arrow.targets, weights)))
    return Cone(f"measure{p.weights}", tuple(legs))


@dataclass(frozen=True)
class NaturalityResult:
    ok: bool
    triangles: int
    witness: tuple | None = None


def check_cone_naturality(cone: Cone, max_map_count: int = 512) -> NaturalityResult:
    """Enumerate commutative triangles inside the declared family and check
    that the legs commute with the simplex maps of all label functions."""
    legs = dict(cone.legs)
    target_sets = sorted({arrow.targets for arrow in legs})
    triangles = 0
    for f in legs:
        for targets in target_sets:
            if len(targets) ** len(f.targets) > max_map_count:
                continue
            for image in itertools.product(targets, repeat=len(f.targets)):
                mapping = dict(zip(f.targets, image))
                composed = f.compose_label_map(mapping, targets)
                leg_g = legs.get(composed)
                if leg_g is None:
                    continue
                triangles += 1
                expected = map_simplex(legs[f], mapping, targets)
                if expected != leg_g:
                    return NaturalityResult(
                        False,
                        triangles,
                        witness=(f, mapping, composed, expected, leg_g),
                    )
    return NaturalityResult(True, triangles)


def _binary_indicator_mask(arrow: Arrow) -> int | None:
    """The member whose indicator's binary arrow this is, if it is one."""
    if arrow.targets != BINARY_LABELS:
        return None
    mask = 0
    for atom, row in zip(arrow.source.atoms, arrow.rows):
        v = row.weights[1]
        if v == ONE:
            mask |= atom
        elif v != ZERO:
            return None
    return mask


def reconstruct_from_cone(
    cone: Cone, mode: Mode = Mode.SIGMA, recheck_naturality: bool = True
) -> Measure:
    """The unique measure whose canonical cone has the given legs.

    Requires the declared family to contain the binary indicator arrow of
    every atom; naturality is checked first and failures are reported with
    the violating triangle.  The indicator legs are handed to the functional
    reconstruction, which supplies normalization and finite-additivity
    checking.
    """
    if recheck_naturality:
        naturality = check_cone_naturality(cone)
        if not naturality.ok:
            raise ReconstructionError(
                "cone legs do not commute with a label map", witness=naturality.witness
            )
    source = cone.family[0].source
    table: dict[int, Fraction] = {}
    for arrow, point in cone.legs:
        mask = _binary_indicator_mask(arrow)
        if mask is not None:
            table[mask] = point.weights[1]
    needed = source.atoms + (source.ground.full_mask,)
    missing = [mask for mask in needed if mask not in table]
    if missing:
        raise ReconstructionError(
            "family lacks the binary indicator arrows needed to determine "
            "a measure (every atom and the whole set)",
            witness=tuple(missing),
        )
    pairs = [
        (SimpleFunction.indicator(source, mask), value)
        for mask, value in sorted(table.items())
    ]
    functional = Functional.from_table(source, pairs)
    if mode is Mode.SIGMA:
        return reconstruct_measure(functional)
    return reconstruct_charge(functional).with_mode(mode)


@dataclass(frozen=True)
class BijectionReport:
    cases: int
    round_trip_failures: tuple[str, ...]
    naturality_failures: tuple[str, ...]
    uniqueness_failures: tuple[str, ...]
    triangles: int

    @property
    def ok(self) -> bool:
        return not (
            self.round_trip_failures
            or self.naturality_failures
            or self.uniqueness_failures
        )


def verify_codensity_bijection(
    algebra: Algebra | None = None,
    cases: int = 100,
    seed: int = 0,
    max_denominator: int = 12,
    mode: Mode = Mode.SIGMA,
    max_ground_size: int = 4,
) -> BijectionReport:
    """Round-trip and uniqueness checks for the measure/cone correspondence.

    For seeded random measures: the cone of the measure passes naturality on
    every enumerated triangle, reconstructing from the cone returns the
    measure exactly, reconstructing and re-taking the cone reproduces every
    leg, and distinct measures are separated by some binary indicator leg.
    """
    from . import gen

    round_trip: list[str] = []
    naturality: list[str] = []
    uniqueness: list[str] = []
    triangles = 0

    for case in range(cases):
        rng = gen.rng_for(seed, "codensity", str(case))
        current = algebra or gen.random_algebra(
            rng, gen.random_ground(rng, max_ground_size)
        )
        family = indicator_family(current)
        p = gen.random_measure(rng, current, max_denominator, mode)
        cone = cone_of_measure(p, family)
        nat = check_cone_naturality(cone)
        triangles += nat.triangles
        if not nat.ok:
            naturality.append(f"case {case}: {nat.witness[1]}")
            continue
        back = reconstruct_from_cone(cone, mode, recheck_naturality=False)
        if back != p:
            round_trip.append(f"case {case}: {p.weights} -> {back.weights}")
            continue
        again = cone_of_measure(back, family)
        if again.legs != cone.legs:
            round_trip.append(f"case {case}: cone legs changed on the round trip")

        q = gen.random_measure(rng, current, max_denominator, mode)
        legs_p = cone.legs
        legs_q = cone_of_measure(q, family).legs
        if (q == p) != (legs_p == legs_q):
            uniqueness.append(
                f"case {case}: legs {'agree' if legs_p == legs_q else 'differ'} "
                f"but measures {'agree' if q == p else 'differ'}"
            )

    return BijectionReport(
        cases,
        tuple(round_trip),
        tuple(naturality),
        tuple(uniqueness),
        triangles,
    )


@dataclass(frozen=True)
class SufficiencyReport:
    k: int
    determined: bool
    cases: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def small_index_sufficiency(
    algebra: Algebra | None,
    k: int,
    cases: int = 50,
    seed: int = 0,
    max_denominator: int = 12,
    mode: Mode = Mode.SIGMA,
    max_ground_size: int = 4,
) -> SufficiencyReport:
    """Whether arrows with at most ``k`` target labels already determine the
    reconstruction.

    With one label only the collapse arrow exists, which carries nothing but
    normalization, so reconstruction is undetermined; with two labels the
    binary indicator arrows separate measures and reconstruction succeeds.
    """
    from . import gen

    if k < 1:
        raise PreconditionError("label-set size bound must be at least 1")

    failures: list[str] = []
    determined = True
    for case in range(cases):
        rng = gen.rng_for(seed, "sufficiency", str(case))
        current = algebra or gen.random_algebra(
            rng, gen.random_ground(rng, max_ground_size)
        )
        family = tuple(a for a in indicator_family(current) if len(a.targets) <= k)
        if k >= 3 and len(current.atoms) <= 3:
            family = family + (_atom_arrow(current, k),)
        p = gen.random_measure(rng, current, max_denominator, mode)
        q = gen.random_measure(rng, current, max_denominator, mode)
        cone = cone_of_measure(p, family)
        try:
            back = reconstruct_from_cone(cone, mode)
        except ReconstructionError:
            determined = False
            continue
        if back != p:
            failures.append(f"case {case}: reconstruction wrong at k={k}")
        if p != q and cone_of_measure(q, family).legs == cone.legs:
            determined = False
    return SufficiencyReport(k, determined, cases, tuple(failures))


def _atom_arrow(algebra: Algebra, k: int) -> Arrow:
    """An arrow separating up to ``k`` atoms, used to exercise wider targets."""
    count = min(k, len(algebra.atoms))
    targets = tuple(f"t{i}" for i in range(count))
    rows = tuple(
        SimplexPoint.point_mass(targets, targets[min(i, count - 1)])
        for i in range(len(algebra.atoms))
    )
    return Arrow(algebra, targets, rows)
