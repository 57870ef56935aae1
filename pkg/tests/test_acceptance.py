"""Acceptance battery: one test per numbered criterion plus the wall-clock budget.

Each test prints its one-line PASS/FAIL verdict; the lines are also
collected and repeated in the terminal summary (see conftest.py).
"""

import pytest

from qsf import suite

# pinned tolerances: residual checks, boundary values, roots, orthogonality,
# Wronskian threshold, kernel table, form equivalence
TOLERANCES = {
    1: {1e-6},
    2: {1e-9},
    3: {1e-6, 1e-12},
    4: {1e-6, 1e-10},
    5: {1e-9},
    6: {1e-6},
    7: {1e-8},
    8: {1.0},  # residual is 1e-8 / |det|
    9: {1e-10, 1e-9},
    10: {1e-8},
}
SUITE_BUDGET = 60.0
C1_BUDGET = 5.0

LINES = []


@pytest.fixture(scope="module")
def result():
    return suite.run_suite()


def _verdict(res, n):
    crit = next(c for c in res.criteria if c.number == n)
    line = crit.summary()
    LINES.append(line)
    print(line)
    for r in crit.reports:
        if not r.passed:
            print(f"    {r.name} {r.inputs}: {r.residual:.3e} > {r.tolerance:g} {r.error or ''}")
    return crit


@pytest.mark.parametrize("n", range(1, 11))
def test_criterion(result, n):
    crit = _verdict(result, n)
    assert crit.reports, "no checks ran"
    assert {r.tolerance for r in crit.reports} <= TOLERANCES[n]
    assert crit.passed


def test_criterion_1_budget(result):
    crit = next(c for c in result.criteria if c.number == 1)
    assert crit.budget == C1_BUDGET
    assert crit.elapsed <= C1_BUDGET


def test_criterion_9_table_size(result):
    crit = next(c for c in result.criteria if c.number == 9)
    assert len(crit.reports) >= 200


def test_exclusions_are_reported(result):
    # degenerate cells are dropped only with a stated reason
    for crit in result.criteria:
        for item in crit.excluded:
            assert str(item).strip()


def test_suite_runtime(result):
    line = result.lines()[-1]
    LINES.append(line)
    print(line)
    assert result.budget == SUITE_BUDGET
    assert result.elapsed <= SUITE_BUDGET
