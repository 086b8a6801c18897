"""Reconstruction of measures from integration functionals, and the measure
extension machinery: weak integration lattices, half-open slabs between
functions, Carathéodory extension over semi-rings, and the slab route from a
lattice functional to its unique representing measure.

The slab route is deliberately implemented in full -- build the semi-ring of
slabs ``{(x, t) : f(x) <= t < g(x)}``, extend the induced premeasure to the
generated algebra on a finite product grid, and read the measure off the
height-one slice -- and is then cross-checked against the direct indicator
reconstruction wherever the lattice exposes indicators.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .errors import (
    DomainError,
    ExtensionError,
    PreconditionError,
    ReconstructionError,
)
from .integrate import SimpleFunction, canonicalize, simple_integral
from .measure import Measure, Mode, validate
from .setalg import (
    Algebra,
    GroundSet,
    SemiRing,
    generate_algebra,
    sigma_of_functions,
)

ZERO = Fraction(0)
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# Functionals and indicator reconstruction


@dataclass(frozen=True)
class Functional:
    """An integration functional supplied with a finite declared test family.

    The additivity hypotheses of the representation results cannot be checked
    on the full function space, so reconstruction asserts them on the test
    family (plus all indicators of atoms) and reports violations with
    witnesses.
    """

    algebra: Algebra
    oracle: Callable[[SimpleFunction], Fraction]
    test_family: tuple[SimpleFunction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "test_family", tuple(self.test_family))
        for s in self.test_family:
            if s.algebra != self.algebra:
                raise DomainError("test family must live on the functional's algebra")

    @classmethod
    def from_table(
        cls,
        algebra: Algebra,
        pairs: Iterable[tuple[SimpleFunction, Fraction]],
    ) -> "Functional":
        table = {canonicalize(s): Fraction(v) for s, v in pairs}

        def oracle(s: SimpleFunction) -> Fraction:
            key = canonicalize(s)
            if key not in table:
                raise DomainError("functional table has no entry for this function")
            return table[key]

        return cls(algebra, oracle, tuple(table))

    def value(self, s: SimpleFunction) -> Fraction:
        return Fraction(self.oracle(s))


def reconstruct_charge(f: Functional) -> Measure:
    """The unique charge with the functional's indicator values.

    Sets ``P(A) := F(1_A)`` on atoms, then asserts that the induced measure
    validates, that the full ground set gets mass one, and that integration
    against ``P`` reproduces the functional on the declared test family.
    """
    return _reconstruct(f, Mode.FINITELY_ADDITIVE)


def reconstruct_measure(f: Functional) -> Measure:
    """As :func:`reconstruct_charge`, additionally asserting finite-sum
    additivity over disjoint indicator families (the faithful finite
    instantiation of countable additivity) and flagging the result
    sigma-additive."""
    p = _reconstruct(f, Mode.SIGMA)
    indicator_masks = _indicator_masks(f)
    for masks in _disjoint_families(indicator_masks, f.algebra, max_size=3):
        union = 0
        for m in masks:
            union |= m
        if union not in indicator_masks:
            continue
        total = sum(
            (f.value(SimpleFunction.indicator(f.algebra, m)) for m in masks), ZERO
        )
        whole = f.value(SimpleFunction.indicator(f.algebra, union))
        if total != whole:
            raise ReconstructionError(
                f"finite-sum additivity violated: F(union)={whole} but parts sum to {total}",
                witness=tuple(masks) + (union,),
            )
    return p


def _reconstruct(f: Functional, mode: Mode) -> Measure:
    algebra = f.algebra
    full = SimpleFunction.indicator(algebra, algebra.ground.full_mask)
    total = f.value(full)
    if total != 1:
        raise ReconstructionError(
            f"normalization violated: F(1_X) = {total}", witness=(full, total)
        )
    weights = tuple(
        f.value(SimpleFunction.indicator(algebra, atom)) for atom in algebra.atoms
    )
    if any(w < 0 for w in weights):
        bad = next(w for w in weights if w < 0)
        raise ReconstructionError(
            f"negative indicator value {bad}", witness=(weights,)
        )
    if sum(weights) != 1:
        raise ReconstructionError(
            "additivity violated: the ground set decomposes into atoms with "
            f"total indicator mass {sum(weights)}, but F(1_X) = 1",
            witness=(algebra.ground.full_mask, algebra.atoms, sum(weights)),
        )
    p = Measure(algebra, weights, mode)
    report = validate(p)
    if not report.ok:
        raise ReconstructionError(
            f"reconstructed object is not a measure: {report.diagnostics[0]}",
            witness=report.diagnostics,
        )
    failures = []
    for s in f.test_family:
        got = f.value(s)
        expected = simple_integral(p, s)
        if got != expected:
            failures.append((s, expected, got))
    if failures:
        s, expected, got = failures[0]
        raise ReconstructionError(
            f"additivity violated on the test family: F(s) = {got} but "
            f"integration against the indicator reconstruction gives {expected}",
            witness=tuple(failures),
        )
    return p


def _indicator_masks(f: Functional) -> set[int]:
    masks = set(f.algebra.atoms)
    masks.add(0)
    masks.add(f.algebra.ground.full_mask)
    for s in f.test_family:
        if set(s.values) <= {ZERO, ONE}:
            masks.add(
                sum(
                    atom
                    for atom, v in zip(f.algebra.atoms, s.values)
                    if v == ONE
                )
            )
    return masks


def _disjoint_families(
    masks: set[int], algebra: Algebra, max_size: int
) -> Iterable[tuple[int, ...]]:
    pool = sorted(m for m in masks if m)
    for size in range(2, max_size + 1):
        for combo in itertools.combinations(pool, size):
            union, disjoint = 0, True
            for m in combo:
                if union & m:
                    disjoint = False
                    break
                union |= m
            if disjoint:
                yield combo


# ---------------------------------------------------------------------------
# Weak integration lattices


@dataclass(frozen=True)
class WeakIntegrationLattice:
    """A finite family of nonnegative rational functions on a ground set,
    closed in the weak lattice sense: it contains the constant one; joins,
    meets, and join-minus-meet of members are integer multiples of members;
    clipped integer multiples ``min(n*f, 1)`` are integer multiples of
    members up to the declared bound; and ``r*f`` is a member for every
    declared scalar ``r``.  The zero function, which always lies in the
    integer-multiple span, is adjoined automatically.

    Functions are deduplicated and sorted at construction; optional
    ``scale_witnesses`` entries are keyed ``(clause, i, j-or-n-or-r)`` with
    indices into the canonicalized ``functions`` tuple and are verified
    rather than trusted."""

    ground: GroundSet
    functions: tuple[tuple[Fraction, ...], ...]
    scalars: tuple[Fraction, ...] = (ZERO, ONE)
    clip_bound: int = 4
    scale_witnesses: Mapping | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        fns = []
        seen = set()
        for vec in self.functions:
            vec = tuple(Fraction(v) for v in vec)
            if len(vec) != self.ground.size:
                raise ValueError("every function must assign a value to each point")
            if any(v < 0 for v in vec):
                raise ValueError("lattice functions must be nonnegative")
            if vec not in seen:
                seen.add(vec)
                fns.append(vec)
        zero = (ZERO,) * self.ground.size
        if zero not in seen:
            fns.append(zero)
        object.__setattr__(self, "functions", tuple(sorted(fns)))
        object.__setattr__(
            self, "scalars", tuple(sorted({Fraction(r) for r in self.scalars}))
        )
        for r in self.scalars:
            if r < 0 or r > 1:
                raise ValueError("declared scalars must lie in [0, 1]")
        if self.clip_bound < 1:
            raise ValueError("clip bound must be positive")


@dataclass(frozen=True)
class WeakLatticeReport:
    ok: bool
    clause: str | None
    witness: tuple | None
    witnesses: tuple[tuple, ...]  # (clause key, multiplier, member index) triples


def _as_multiple(
    target: tuple[Fraction, ...],
    members: Sequence[tuple[Fraction, ...]],
    bound: int,
) -> tuple[int, int] | None:
    """Find ``(n, index)`` with ``target == n * members[index]``, ``n`` a
    nonnegative integer at most ``bound`` (zero only for the zero target)."""
    if all(v == 0 for v in target):
        return (0, 0)
    for idx, h in enumerate(members):
        if all(v == 0 for v in h):
            continue
        ratio = None
        consistent = True
        for t, v in zip(target, h):
            if v == 0:
                if t != 0:
                    consistent = False
                    break
                continue
            r = t / v
            if ratio is None:
                ratio = r
            elif r != ratio:
                consistent = False
                break
        if (
            consistent
            and ratio is not None
            and ratio.denominator == 1
            and 1 <= ratio <= bound
        ):
            return (int(ratio), idx)
    return None


def check_weak_lattice(
    lattice: WeakIntegrationLattice, multiplier_bound: int = 64
) -> WeakLatticeReport:
    """Verify the four weak-lattice closure clauses exactly.

    A provided ``scale_witnesses`` entry (keyed by clause and operands,
    valued ``(multiplier, member index)``) is verified directly; absent
    witnesses are searched up to ``multiplier_bound``.  Reports the first
    unsatisfiable clause.
    """
    fns = lattice.functions
    n_pts = lattice.ground.size
    one = (ONE,) * n_pts
    provided = lattice.scale_witnesses or {}
    witnesses: list[tuple] = []

    if one not in fns:
        return WeakLatticeReport(False, "contains-one", (), ())

    def exhibit(key, target):
        """A verified (multiplier, member index) pair for target in NL."""
        if key in provided:
            n, idx = provided[key]
            if 0 <= idx < len(fns) and all(
                t == n * v for t, v in zip(target, fns[idx])
            ):
                return (n, idx)
            return None  # a wrong witness is a failure, not a search trigger
        return _as_multiple(target, fns, multiplier_bound)

    for i, f in enumerate(fns):
        for j, g in enumerate(fns[i:], start=i):
            join = tuple(max(a, b) for a, b in zip(f, g))
            meet = tuple(min(a, b) for a, b in zip(f, g))
            span = tuple(a - b for a, b in zip(join, meet))
            for kind, target in (("join", join), ("meet", meet), ("span", span)):
                found = exhibit((kind, i, j), target)
                if found is None:
                    return WeakLatticeReport(
                        False, kind, (i, j, target), tuple(witnesses)
                    )
                witnesses.append(((kind, i, j), found[0], found[1]))

    for i, f in enumerate(fns):
        for n in range(1, lattice.clip_bound + 1):
            clipped = tuple(min(n * v, ONE) for v in f)
            found = exhibit(("clip", i, n), clipped)
            if found is None:
                return WeakLatticeReport(False, "clip", (i, n, clipped), tuple(witnesses))
            witnesses.append((("clip", i, n), found[0], found[1]))

    for i, f in enumerate(fns):
        for r in lattice.scalars:
            scaled = tuple(r * v for v in f)
            if scaled not in fns:
                return WeakLatticeReport(False, "scale", (i, r, scaled), tuple(witnesses))
            witnesses.append((("scale", i, r), 1, fns.index(scaled)))

    return WeakLatticeReport(True, None, None, tuple(witnesses))


# ---------------------------------------------------------------------------
# Slabs


@dataclass(frozen=True)
class Slab:
    """The region ``{(x, t) : lower(x) <= t < upper(x)}`` between two
    nonnegative step functions constant on the atoms of one algebra."""

    algebra: Algebra
    lower: tuple[Fraction, ...]  # per atom
    upper: tuple[Fraction, ...]

    def __post_init__(self):
        lower = tuple(Fraction(v) for v in self.lower)
        upper = tuple(Fraction(v) for v in self.upper)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        k = len(self.algebra.atoms)
        if len(lower) != k or len(upper) != k:
            raise ValueError("one bound per atom required")
        for lo, hi in zip(lower, upper):
            if lo < 0:
                raise ValueError("slab bounds must be nonnegative")
            if lo > hi:
                raise ValueError(f"lower bound {lo} exceeds upper bound {hi}")

    @classmethod
    def from_simple(cls, lower: SimpleFunction, upper: SimpleFunction) -> "Slab":
        if lower.algebra != upper.algebra:
            raise DomainError("slab bounds must live on one algebra")
        return cls(lower.algebra, lower.values, upper.values)

    @property
    def is_empty(self) -> bool:
        return all(lo == hi for lo, hi in zip(self.lower, self.upper))

    def contains(self, label: str, t: Fraction) -> bool:
        i = self.algebra.atom_of_point(label)
        return self.lower[i] <= Fraction(t) < self.upper[i]

    def breakpoints(self) -> tuple[Fraction, ...]:
        return tuple(sorted(set(self.lower) | set(self.upper)))

    def normalized(self) -> "Slab":
        """Canonical form: per-atom empty intervals collapse to [0, 0), so
        extensional equality becomes structural equality."""
        pairs = [
            (lo, hi) if lo < hi else (ZERO, ZERO)
            for lo, hi in zip(self.lower, self.upper)
        ]
        return Slab(self.algebra, tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))


def _common_algebra(a: Slab, b: Slab) -> tuple[Slab, Slab]:
    if a.algebra.ground != b.algebra.ground:
        raise DomainError("slabs live on different ground sets")
    if a.algebra == b.algebra:
        return a, b
    refined = a.algebra.refine_with(b.algebra)
    return _on_refined(a, refined), _on_refined(b, refined)


def _on_refined(s: Slab, refined: Algebra) -> Slab:
    lower, upper = [], []
    for atom in refined.atoms:
        label = refined.ground.labels_of(atom)[0]
        i = s.algebra.atom_of_point(label)
        lower.append(s.lower[i])
        upper.append(s.upper[i])
    return Slab(refined, tuple(lower), tuple(upper))


def slab_intersect(a: Slab, b: Slab) -> Slab:
    """Pointwise intersection: ``[f1 v f2, g1 ^ g2)``, clamped so the lower
    bound never exceeds the upper."""
    a, b = _common_algebra(a, b)
    upper = tuple(min(x, y) for x, y in zip(a.upper, b.upper))
    lower = tuple(
        min(max(x, y), u) for x, y, u in zip(a.lower, b.lower, upper)
    )
    return Slab(a.algebra, lower, upper).normalized()


def slab_subtract(a: Slab, b: Slab) -> tuple[Slab, ...]:
    """Set difference as at most two disjoint slabs.

    The lower piece is ``[f1, g1 ^ f2)`` and the upper piece
    ``[f1 v g2, g1)``, each clamped per atom; adjacent pieces merge back into
    one slab and empty pieces are dropped.
    """
    a, b = _common_algebra(a, b)
    low_piece = Slab(
        a.algebra,
        a.lower,
        tuple(max(lo, min(g1, f2)) for lo, g1, f2 in zip(a.lower, a.upper, b.lower)),
    )
    high_piece = Slab(
        a.algebra,
        tuple(min(g1, max(f1, g2)) for f1, g1, g2 in zip(a.lower, a.upper, b.upper)),
        a.upper,
    )
    if low_piece.upper == high_piece.lower:
        merged = Slab(a.algebra, low_piece.lower, high_piece.upper).normalized()
        return () if merged.is_empty else (merged,)
    pieces = tuple(
        s.normalized() for s in (low_piece, high_piece) if not s.is_empty
    )
    return pieces


# ---------------------------------------------------------------------------
# Caratheodory extension over a semi-ring


@dataclass(frozen=True)
class ExtensionResult:
    """A premeasure extended to the algebra generated by its semi-ring.

    Total mass is carried as metadata; normalization is the caller's choice.
    ``covered`` is the union of the semi-ring members -- atoms outside it are
    assigned weight zero and listed in ``uncovered_atoms``.
    """

    algebra: Algebra
    weights: tuple[Fraction, ...]
    mass: Fraction
    covered: int

    @property
    def uncovered_atoms(self) -> tuple[int, ...]:
        return tuple(a for a in self.algebra.atoms if not a & self.covered)

    def value(self, mask: int) -> Fraction:
        self.algebra.check_member(mask)
        return sum(
            (w for atom, w in zip(self.algebra.atoms, self.weights) if atom & mask),
            ZERO,
        )

    def to_measure(self, mode: Mode = Mode.SIGMA) -> Measure:
        if self.mass != 1:
            raise DomainError(f"extension has total mass {self.mass}, not 1")
        return Measure(self.algebra, self.weights, mode)


def caratheodory_extend(
    semiring: SemiRing, mu: Mapping[int, Fraction]
) -> ExtensionResult:
    """Extend an additive premeasure from a semi-ring to the generated algebra.

    Every atom of the generated algebra inside the union of the semi-ring is
    itself a semi-ring member, so atom weights are read off directly; the
    premeasure's additivity over each member's atom decomposition is then
    checked exhaustively, which pins the extension uniquely.
    """
    values = {}
    for member in semiring.members:
        if member not in mu:
            raise DomainError(
                f"premeasure missing a value for member {member:#x}"
            )
        v = Fraction(mu[member])
        if v < 0:
            raise ExtensionError(
                f"premeasure value {v} on {member:#x} is negative", witness=(member, v)
            )
        values[member] = v
    if values.get(0, ZERO) != 0:
        raise ExtensionError(
            f"premeasure of the empty set is {values[0]}, not 0", witness=(0, values[0])
        )

    generated = generate_algebra(semiring.ground, semiring.members)
    covered = 0
    for member in semiring.members:
        covered |= member

    weights = []
    for atom in generated.atoms:
        if not atom & covered:
            weights.append(ZERO)
            continue
        if atom not in values:
            raise AssertionError(
                "atom of the generated algebra escapes the semi-ring"
            )  # impossible for a validated semi-ring
        weights.append(values[atom])

    atom_weight = dict(zip(generated.atoms, weights))
    for member in semiring.members:
        parts = [a for a in generated.atoms if a & member]
        total = sum((atom_weight[a] for a in parts), ZERO)
        if total != values[member]:
            raise ExtensionError(
                f"premeasure is not additive: mu = {values[member]} on a member "
                f"whose disjoint decomposition sums to {total}",
                witness=(member, tuple(parts)),
            )

    return ExtensionResult(
        generated, tuple(weights), sum(weights, ZERO), covered
    )


# ---------------------------------------------------------------------------
# The slab route from a lattice functional to its measure


def daniell_stone(
    lattice: WeakIntegrationLattice,
    oracle: Callable[[tuple[Fraction, ...]], Fraction],
    multiplier_bound: int = 64,
    family_cap: int = 512,
) -> Measure:
    """The unique measure representing a lattice functional, via slabs.

    Builds the semi-ring of slabs between members of a join/meet-closed bound
    family (the lattice functions bounded by one, the constants zero and one,
    and the indicators of the generated algebra's members, all of which lie
    in the integer-multiple span of a valid lattice), assigns each slab the
    lifted functional value of its height, runs the Carathéodory extension on
    the induced finite product grid, and reads the measure off the
    height-one slice.  The result is cross-checked against the direct
    indicator reconstruction whenever the lattice exposes every indicator.
    """
    report = check_weak_lattice(lattice, multiplier_bound)
    if not report.ok:
        raise PreconditionError(
            f"invalid weak integration lattice: clause {report.clause} fails "
            f"with witness {report.witness}"
        )
    ground = lattice.ground
    one_vec = (ONE,) * ground.size
    zero_vec = (ZERO,) * ground.size
    table = {zero_vec: ZERO}  # I(0) = 0 is forced; the oracle is never asked
    for vec in lattice.functions:
        if vec == zero_vec:
            continue
        v = Fraction(oracle(vec))
        if v < 0:
            raise PreconditionError(f"functional value {v} is negative")
        table[vec] = v
    if table[one_vec] != 1:
        raise PreconditionError(f"functional sends 1 to {table[one_vec]}, not 1")

    sigma = sigma_of_functions(ground, lattice.functions)
    atom_count = len(sigma.atoms)

    def to_atom_vec(point_vec: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
        out = []
        for atom in sigma.atoms:
            idx = next(i for i in range(ground.size) if atom >> i & 1)
            out.append(point_vec[idx])
        return tuple(out)

    members_atom = {to_atom_vec(vec): vec for vec in lattice.functions}

    def lift(height: tuple[Fraction, ...]) -> Fraction | None:
        """The lifted functional on rational multiples of declared members."""
        if all(v == 0 for v in height):
            return ZERO
        for member, point_vec in members_atom.items():
            if all(v == 0 for v in member):
                continue
            ratio = None
            for t, v in zip(height, member):
                if v == 0:
                    if t != 0:
                        ratio = None
                        break
                    continue
                r = t / v
                if ratio is None:
                    ratio = r
                elif r != ratio:
                    ratio = None
                    break
            if ratio is not None and ratio > 0:
                return ratio * table[point_vec]
        return None

    # Join/meet-closed family of slab bounds, capped at height one.
    bounds = {(ZERO,) * atom_count, (ONE,) * atom_count}
    for vec in members_atom:
        if all(v <= 1 for v in vec):
            bounds.add(vec)
    for member_mask in sigma.members:
        bounds.add(
            tuple(ONE if atom & member_mask else ZERO for atom in sigma.atoms)
        )
    frontier = list(bounds)
    while frontier:
        if len(bounds) > family_cap:
            raise ExtensionError(
                f"slab bound family exceeds the desk-scale cap {family_cap}"
            )
        f = frontier.pop()
        for g in tuple(bounds):
            for combo in (
                tuple(max(x, y) for x, y in zip(f, g)),
                tuple(min(x, y) for x, y in zip(f, g)),
            ):
                if combo not in bounds:
                    bounds.add(combo)
                    frontier.append(combo)
    bound_family = sorted(bounds)

    # Finite product grid: sigma atoms times vertical cells between breakpoints.
    breakpoints = sorted({v for vec in bound_family for v in vec} | {ZERO, ONE})
    cells = list(zip(breakpoints, breakpoints[1:]))
    product_points = tuple(
        f"a{i}c{j}" for i in range(atom_count) for j in range(len(cells))
    )
    product_ground = GroundSet(
        product_points, size_cap=max(len(product_points), 16)
    )

    def slab_mask(lower, upper) -> int:
        mask = 0
        bit = 0
        for i in range(atom_count):
            for lo_cell, hi_cell in cells:
                if lower[i] <= lo_cell and hi_cell <= upper[i]:
                    mask |= 1 << bit
                bit += 1
        return mask

    slab_values: dict[int, tuple] = {}
    for lower in bound_family:
        for upper in bound_family:
            if any(lo > hi for lo, hi in zip(lower, upper)):
                continue
            mask = slab_mask(lower, upper)
            height = tuple(hi - lo for lo, hi in zip(lower, upper))
            value = lift(height)
            if value is None:
                raise ExtensionError(
                    "slab height is not a rational multiple of any declared "
                    "lattice member; declare a richer family",
                    witness=(lower, upper),
                )
            if mask in slab_values and slab_values[mask][0] != value:
                raise ExtensionError(
                    "functional assigns different masses to one slab set",
                    witness=(slab_values[mask][1], (lower, upper)),
                )
            slab_values.setdefault(mask, (value, (lower, upper)))

    semiring = SemiRing(product_ground, tuple(slab_values))
    extension = caratheodory_extend(
        semiring, {mask: value for mask, (value, _) in slab_values.items()}
    )

    weights = []
    for i in range(atom_count):
        column = 0
        for j in range(len(cells)):
            column |= 1 << (i * len(cells) + j)
        weights.append(extension.value(column))
    try:
        result = Measure(sigma, tuple(weights), Mode.SIGMA)
    except ValueError as exc:
        raise ExtensionError(f"slab extension is not a probability measure: {exc}")

    # representation property on lattice members bounded by one
    for vec in lattice.functions:
        if any(v > 1 for v in vec):
            continue
        f_simple = SimpleFunction(sigma, to_atom_vec(vec))
        if simple_integral(result, f_simple) != table[vec]:
            raise ExtensionError(
                "slab route fails to represent the functional",
                witness=(vec, table[vec], simple_integral(result, f_simple)),
            )

    # uniqueness cross-check against the direct indicator reconstruction
    indicator_pairs = []
    complete = True
    for member_mask in sigma.members:
        ind = tuple(ONE if atom & member_mask else ZERO for atom in sigma.atoms)
        value = lift(ind)
        if value is None:
            complete = False
            break
        indicator_pairs.append((SimpleFunction.indicator(sigma, member_mask), value))
    if complete:
        direct = reconstruct_measure(
            Functional.from_table(sigma, indicator_pairs)
        )
        if direct != result:
            raise ExtensionError(
                "slab route disagrees with the direct indicator reconstruction",
                witness=(result.weights, direct.weights),
            )
    return result
