"""The probability monad on finite spaces: functor action on distributions,
Dirac unit, averaging multiplication, and exhaustive law verification.

Distributions over a plain label set are :class:`SimplexPoint`; measures on
``GX`` are represented with finite support only (:class:`MetaMeasure`), which
makes the averaging integral an exact weighted sum.  The law suite runs
identically under the sigma-additive and finitely-additive flags.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DomainError
from .measure import Measure, Mode, dirac, pushforward
from .setalg import Algebra

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class SimplexPoint:
    """A probability distribution on a finite ordered label set."""

    labels: tuple[str, ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        weights = tuple(Fraction(w) for w in self.weights)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "weights", weights)
        if len(set(labels)) != len(labels):
            raise ValueError("simplex labels must be distinct")
        if len(weights) != len(labels):
            raise ValueError("one weight per label required")
        if any(w < 0 for w in weights):
            raise ValueError("simplex weights must be nonnegative")
        if sum(weights) != 1:
            raise ValueError(f"simplex weights must sum to 1, got {sum(weights)}")

    def weight(self, label: str) -> Fraction:
        try:
            return self.weights[self.labels.index(label)]
        except ValueError:
            raise DomainError(f"label {label!r} not in simplex index set") from None

    @classmethod
    def point_mass(cls, labels: Sequence[str], x: str) -> "SimplexPoint":
        labels = tuple(labels)
        if x not in labels:
            raise DomainError(f"label {x!r} not in simplex index set")
        return cls(labels, tuple(ONE if y == x else ZERO for y in labels))


def map_simplex(
    p: SimplexPoint, mapping: Mapping[str, str], targets: Sequence[str]
) -> SimplexPoint:
    """Functor action on distributions: push weights along preimages."""
    targets = tuple(targets)
    sums = {t: ZERO for t in targets}
    for label, w in zip(p.labels, p.weights):
        if label not in mapping:
            raise DomainError(f"map is not total: missing {label!r}")
        t = mapping[label]
        if t not in sums:
            raise DomainError(f"map sends {label!r} outside the target labels")
        sums[t] += w
    return SimplexPoint(targets, tuple(sums[t] for t in targets))


def unit(x: str, algebra: Algebra, mode: Mode = Mode.SIGMA) -> Measure:
    """The monad unit: the Dirac measure at ``x``."""
    return dirac(x, algebra, mode)


@dataclass(frozen=True)
class MetaMeasure:
    """A finitely supported probability measure on the measures of a space.

    Support measures are pairwise distinct, share one algebra and one mode,
    and every weight is strictly positive (zero-weight entries are rejected
    rather than silently dropped).
    """

    support: tuple[Measure, ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        weights = tuple(Fraction(w) for w in self.weights)
        object.__setattr__(self, "support", tuple(self.support))
        object.__setattr__(self, "weights", weights)
        if not self.support:
            raise ValueError("meta-measure needs at least one support measure")
        if len(weights) != len(self.support):
            raise ValueError("one weight per support measure required")
        if len(set(self.support)) != len(self.support):
            raise ValueError("support measures must be pairwise distinct")
        first = self.support[0]
        for q in self.support[1:]:
            if q.algebra != first.algebra:
                raise ValueError("support measures must share one algebra")
            if q.mode != first.mode:
                raise ValueError("support measures must share one mode")
        if any(w <= 0 for w in weights):
            raise ValueError("meta-measure weights must be strictly positive")
        if sum(weights) != 1:
            raise ValueError(f"meta-measure weights must sum to 1, got {sum(weights)}")

    @property
    def algebra(self) -> Algebra:
        return self.support[0].algebra

    @property
    def mode(self) -> Mode:
        return self.support[0].mode

    @classmethod
    def point_mass(cls, p: Measure) -> "MetaMeasure":
        return cls((p,), (ONE,))


def mult(m: MetaMeasure) -> Measure:
    """The monad multiplication: average the support measures.

    ``mult(M)(A)`` is the integral of ``P(A)`` against ``M``; with finite
    support this is exactly ``sum_i weight_i * P_i(A)``.
    """
    k = len(m.algebra.atoms)
    acc = [ZERO] * k
    for w, p in zip(m.weights, m.support):
        for i in range(k):
            acc[i] += w * p.weights[i]
    return Measure(m.algebra, tuple(acc), m.mode)


def combine_meta(parts: Sequence[tuple[Fraction, MetaMeasure]]) -> MetaMeasure:
    """Convex combination of meta-measures, merging duplicate support."""
    if not parts:
        raise ValueError("empty combination")
    merged: dict[Measure, Fraction] = {}
    for coeff, m in parts:
        coeff = Fraction(coeff)
        if coeff <= 0:
            raise ValueError("combination coefficients must be positive")
        for w, p in zip(m.weights, m.support):
            merged[p] = merged.get(p, ZERO) + coeff * w
    support = tuple(sorted(merged, key=lambda p: p.weights))
    return MetaMeasure(support, tuple(merged[p] for p in support))


def eta_as_meta(p: Measure) -> MetaMeasure:
    """The pushforward of ``P`` along the unit, as a finite meta-measure.

    Each atom with positive weight contributes the Dirac measure at (any
    point of) that atom, weighted by the atom's mass.
    """
    merged: dict[Measure, Fraction] = {}
    for atom, w in zip(p.algebra.atoms, p.weights):
        if w == 0:
            continue
        label = p.algebra.ground.labels_of(atom)[0]
        d = dirac(label, p.algebra, p.mode)
        merged[d] = merged.get(d, ZERO) + w
    support = tuple(sorted(merged, key=lambda q: q.weights))
    return MetaMeasure(support, tuple(merged[q] for q in support))


def map_meta(
    m: MetaMeasure, mapping: Mapping[str, str], cod: Algebra
) -> MetaMeasure:
    """The lifted pushforward ``GGf``: push every support measure forward."""
    merged: dict[Measure, Fraction] = {}
    for w, p in zip(m.weights, m.support):
        q = pushforward(p, mapping, cod)
        merged[q] = merged.get(q, ZERO) + w
    support = tuple(sorted(merged, key=lambda q: q.weights))
    return MetaMeasure(support, tuple(merged[q] for q in support))


@dataclass(frozen=True)
class LawFailure:
    law: str
    case: int
    detail: str


@dataclass(frozen=True)
class LawReport:
    mode: Mode
    cases: int
    passed: dict[str, int]
    failures: tuple[LawFailure, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


LAWS = (
    "left-unit",
    "right-unit",
    "associativity",
    "unit-naturality",
    "mult-naturality",
)


def check_monad_laws(
    algebra: Algebra | None = None,
    cases: int = 100,
    seed: int = 0,
    max_denominator: int = 12,
    mode: Mode = Mode.SIGMA,
    max_ground_size: int = 5,
) -> LawReport:
    """Verify the monad laws and naturality with exact equality on seeded
    random instances.  With no algebra given, each case draws its own random
    ground set and algebra within ``max_ground_size``."""
    from . import gen  # deferred: gen builds on this module's types

    passed = {law: 0 for law in LAWS}
    failures: list[LawFailure] = []

    def record(law: str, case: int, ok: bool, detail: str) -> None:
        if ok:
            passed[law] += 1
        elif len(failures) < 10:
            failures.append(LawFailure(law, case, detail))

    for case in range(cases):
        rng = gen.rng_for(seed, "laws", str(case))
        current = algebra or gen.random_algebra(
            rng, gen.random_ground(rng, max_ground_size)
        )
        p = gen.random_measure(rng, current, max_denominator, mode)

        # left unit: flattening the point mass at P returns P
        record(
            "left-unit",
            case,
            mult(MetaMeasure.point_mass(p)) == p,
            f"P={p.weights}",
        )

        # right unit: flattening the unit-pushforward of P returns P
        record("right-unit", case, mult(eta_as_meta(p)) == p, f"P={p.weights}")

        # associativity on a two-level meta structure
        metas = [
            gen.random_meta_measure(rng, current, max_denominator, mode)
            for _ in range(rng.randint(1, 3))
        ]
        outer = gen.random_positive_weights(rng, len(metas), max_denominator)
        flattened_outside = combine_meta(list(zip(outer, metas)))
        via_inner_mult = tuple(mult(m) for m in metas)
        merged: dict[Measure, Fraction] = {}
        for w, q in zip(outer, via_inner_mult):
            merged[q] = merged.get(q, ZERO) + w
        support = tuple(sorted(merged, key=lambda q: q.weights))
        after_g_mult = MetaMeasure(support, tuple(merged[q] for q in support))
        record(
            "associativity",
            case,
            mult(after_g_mult) == mult(flattened_outside),
            f"outer={outer}",
        )

        # naturality of the unit: pushing a Dirac forward is the Dirac of the image
        mapping, cod = gen.random_premeasurable_map(rng, current)
        x = rng.choice(current.ground.points)
        record(
            "unit-naturality",
            case,
            pushforward(unit(x, current, mode), mapping, cod)
            == unit(mapping[x], cod, mode),
            f"x={x} f={mapping}",
        )

        # naturality of mult: pushforward of the average is the average of pushforwards
        meta = gen.random_meta_measure(rng, current, max_denominator, mode)
        record(
            "mult-naturality",
            case,
            pushforward(mult(meta), mapping, cod) == mult(map_meta(meta, mapping, cod)),
            f"f={mapping}",
        )

    return LawReport(mode, cases, passed, tuple(failures))


def is_finite_map(
    mapping: Mapping[str, str], dom_labels: Sequence[str], cod_labels: Sequence[str]
) -> bool:
    """Whether preimages of finite-or-cofinite sets are finite or cofinite.

    On finite label sets every subset is finite, so this is vacuously true;
    the predicate exists for API parity with the countable setting and is
    documented as degenerate.
    """
    for label in dom_labels:
        if label not in mapping:
            raise DomainError(f"map is not total: missing {label!r}")
        if mapping[label] not in cod_labels:
            raise DomainError(f"map sends {label!r} outside the codomain")
    return True
