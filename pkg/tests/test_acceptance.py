"""Acceptance suite: every exit criterion at its stated size, all exact.

Each criterion prints one pass/fail line (visible with ``pytest -s``; the
assertions hold regardless).  Stated runtimes are expectations, not asserted
bounds; measured durations are printed alongside.
"""

import json
import subprocess
import sys
import time
from fractions import Fraction as F

from finprob import (
    Mode,
    SimplexPoint,
    bl_distance_lp,
    bl_distance_subsets,
    check_bl_monad_nonexpansive,
    check_lipschitz_criterion_equivalence,
    check_monad_laws,
    discrete_space,
    small_index_sufficiency,
    verify_codensity_bijection,
)
from finprob.report import SuiteConfig
from finprob import cli


def announce(number, name, ok, started, detail=""):
    duration = time.monotonic() - started
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"criterion {number:>2} {name}: {status} in {duration:.2f}s{suffix}")
    assert ok, f"criterion {number} ({name}) failed{suffix}"


def test_criterion_01_monad_laws():
    started = time.monotonic()
    ok = True
    detail = []
    for mode in (Mode.SIGMA, Mode.FINITELY_ADDITIVE):
        report = check_monad_laws(
            None, cases=500, seed=0, max_denominator=12, mode=mode, max_ground_size=5
        )
        ok = ok and report.ok and all(v == 500 for v in report.passed.values())
        detail.append(f"{mode.value}: {sum(report.passed.values())} law checks")
    announce(1, "monad laws", ok, started, "; ".join(detail))


def test_criterion_02_codensity_bijection():
    started = time.monotonic()
    ok = True
    triangles = 0
    for mode in (Mode.SIGMA, Mode.FINITELY_ADDITIVE):
        report = verify_codensity_bijection(
            None, cases=200, seed=0, max_denominator=12, mode=mode, max_ground_size=4
        )
        ok = ok and report.ok
        triangles += report.triangles
    announce(2, "codensity bijection", ok, started, f"{triangles} triangles checked")


def test_criterion_03_small_index_sufficiency():
    started = time.monotonic()
    r1 = small_index_sufficiency(None, 1, cases=50, seed=0, max_ground_size=4)
    r2 = small_index_sufficiency(None, 2, cases=50, seed=0, max_ground_size=4)
    r3 = small_index_sufficiency(None, 3, cases=50, seed=0, max_ground_size=4)
    ok = (
        (not r1.determined)
        and r2.determined
        and r3.determined
        and r1.ok
        and r2.ok
        and r3.ok
    )
    announce(
        3,
        "small-index sufficiency",
        ok,
        started,
        f"k=1 undetermined, k=2/3 determined over 50 cases each",
    )


def test_criterion_04_bounded_lipschitz_identity():
    started = time.monotonic()
    from finprob import gen, total_variation

    failures = 0
    for case in range(300):
        rng = gen.rng_for(0, "bl-identity", str(case))
        size = rng.randint(2, 8)
        labels = tuple(f"a{i}" for i in range(size))
        space = discrete_space(labels)
        p = gen.random_simplex_point(rng, labels, 12)
        q = gen.random_simplex_point(rng, labels, 12)
        if not (
            bl_distance_lp(p, q, space)
            == bl_distance_subsets(p, q)
            == total_variation(p, q)
        ):
            failures += 1
    labels = ("a", "b", "c")
    worked_p = SimplexPoint(labels, (F(1, 2), F(1, 2), F(0)))
    worked_q = SimplexPoint(labels, (F(1, 3), F(1, 3), F(1, 3)))
    worked = (
        bl_distance_lp(worked_p, worked_q, discrete_space(labels))
        == bl_distance_subsets(worked_p, worked_q)
        == F(1, 3)
    )
    announce(
        4,
        "bounded Lipschitz identity",
        failures == 0 and worked,
        started,
        "300 pairs, |A| <= 8, worked pair = 1/3",
    )


def test_criterion_05_lipschitz_criterion_equivalence():
    started = time.monotonic()
    sweep = check_lipschitz_criterion_equivalence(
        max_space=3, max_labels=3, max_denominator=3, lp_samples=100, seed=0
    )
    announce(
        5,
        "Lipschitz criterion equivalence",
        sweep.ok,
        started,
        f"{sweep.instances} instances, {sweep.lp_spot_checks} LP spot checks",
    )


def test_criterion_06_nonexpansiveness():
    started = time.monotonic()
    report = check_bl_monad_nonexpansive(
        None, cases=100, seed=0, max_denominator=6, max_size=6
    )
    discrete_report = check_bl_monad_nonexpansive(
        discrete_space(("a", "b", "c", "d")), cases=10, seed=0
    )
    tightness = discrete_report.unit_tight == discrete_report.unit_cases
    announce(
        6,
        "unit/mult non-expansiveness",
        report.ok and discrete_report.ok and tightness,
        started,
        f"{report.unit_cases} unit pairs, {report.mult_cases} meta cases, "
        "discrete equality tight",
    )


def test_criterion_07_reconstruction():
    started = time.monotonic()
    config = SuiteConfig(seed=0, cases=500)
    report = cli.run_reconstruction_suite(config)
    by_name = {c.name: c for c in report.checks}
    round_trip = by_name["round-trip"]
    adversarial = by_name["adversarial-detection"]
    ok = (
        report.ok
        and round_trip.passed == 300
        and adversarial.passed == 50
    )
    announce(
        7,
        "functional reconstruction",
        ok,
        started,
        "300 round trips, 50 adversarial detections",
    )


def test_criterion_08_extension_machinery():
    started = time.monotonic()
    config = SuiteConfig(seed=0, cases=500)
    report = cli.run_extension_suite(config)
    by_name = {c.name: c for c in report.checks}
    ok = (
        report.ok
        and by_name["slab-calculus"].passed == 500
        and by_name["singleton-extension"].passed == 100
        and by_name["lattice-representation"].passed == 100
    )
    announce(
        8,
        "extension machinery",
        ok,
        started,
        "500 slab pairs, 100 singleton extensions, 100 lattice routes",
    )


def test_criterion_09_integral_properties():
    started = time.monotonic()
    config = SuiteConfig(seed=0, cases=500)
    report = cli.run_integrate_suite(config)
    ok = report.ok and report.checks[0].passed == 500
    announce(9, "integral properties", ok, started, "500 (P, f, g) triples")


def test_criterion_10_determinism():
    started = time.monotonic()
    command = [sys.executable, "-m", "finprob", "all", "--seed", "0"]
    first = subprocess.run(command, capture_output=True, text=True)
    second = subprocess.run(command, capture_output=True, text=True)
    identical = first.stdout == second.stdout and first.stdout
    passes = first.returncode == 0 and second.returncode == 0
    payload = json.loads(first.stdout) if identical else {}
    announce(
        10,
        "byte-identical reports",
        bool(identical and passes and payload.get("ok")),
        started,
        f"{len(first.stdout)} bytes each",
    )
