"""Exact simplex solver."""

from fractions import Fraction as F

import pytest

from finprob import InfeasibleError, UnboundedError
from finprob.linprog import maximize


def test_single_variable_box():
    result = maximize([F(1)], [[F(1)]], [F(1)])
    assert result.value == 1
    assert result.solution == (F(1),)


def test_two_variable_budget():
    result = maximize(
        [F(3), F(2)],
        [[F(1), F(1)], [F(1), F(0)], [F(0), F(1)]],
        [F(4), F(2), F(3)],
    )
    # optimum at x=2, y=2
    assert result.value == 10
    assert result.solution == (F(2), F(2))


def test_exact_rational_optimum():
    result = maximize(
        [F(1), F(1)],
        [[F(2), F(1)], [F(1), F(3)]],
        [F(1), F(1)],
    )
    # vertex of 2x+y=1 and x+3y=1 is (2/5, 1/5)
    assert result.value == F(3, 5)
    assert result.solution == (F(2, 5), F(1, 5))


def test_degenerate_constraints_terminate():
    # x1 = x2 forced through a degenerate vertex at the origin
    result = maximize(
        [F(1), F(1)],
        [
            [F(1), F(-1)],
            [F(-1), F(1)],
            [F(1), F(0)],
            [F(0), F(1)],
        ],
        [F(0), F(0), F(1), F(1)],
    )
    assert result.value == 2
    assert result.solution == (F(1), F(1))


def test_zero_objective():
    result = maximize([F(0)], [[F(1)]], [F(5)])
    assert result.value == 0


def test_unbounded_detected():
    with pytest.raises(UnboundedError):
        maximize([F(1), F(0)], [[F(0), F(1)]], [F(1)])


def test_negative_rhs_rejected():
    with pytest.raises(InfeasibleError):
        maximize([F(1)], [[F(1)]], [F(-1)])


def test_agrees_with_vertex_enumeration():
    """Independent oracle: scan all constraint-intersection vertices."""
    import itertools

    c = [F(2), F(1)]
    rows = [[F(1), F(2)], [F(3), F(1)], [F(1), F(0)], [F(0), F(1)]]
    rhs = [F(2), F(3), F(1), F(1)]

    def feasible(x):
        return all(v >= 0 for v in x) and all(
            sum(a * v for a, v in zip(row, x)) <= b for row, b in zip(rows, rhs)
        )

    best = F(0)  # origin
    candidates = [[F(0), F(0)]]
    axes = rows + [[F(1), F(0)], [F(0), F(1)]]
    bs = rhs + [F(0), F(0)]
    for (r1, b1), (r2, b2) in itertools.combinations(zip(axes, bs), 2):
        det = r1[0] * r2[1] - r1[1] * r2[0]
        if det == 0:
            continue
        x = [(b1 * r2[1] - b2 * r1[1]) / det, (r1[0] * b2 - r2[0] * b1) / det]
        if feasible(x):
            candidates.append(x)
    best = max(sum(a * v for a, v in zip(c, x)) for x in candidates)
    assert maximize(c, rows, rhs).value == best
