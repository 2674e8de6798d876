"""The eleven acceptance criteria, run at their full pinned sweep bounds.

Each test runs one criterion, prints its one-line pass/fail summary
(outside pytest's capture, so the line is always visible), and asserts both exactness and the time budget: under one second for the
two single-instance criteria, under five minutes for each sweep.
"""

import pytest

from bkpuzzles.sweeps import run_criterion

BUDGETS = {1: 1.0, 2: 1.0}
DEFAULT_BUDGET = 300.0


@pytest.mark.parametrize("number", range(1, 12))
def test_criterion(number, capsys):
    result = run_criterion(number)
    with capsys.disabled():
        print(result.line(), flush=True)
    assert result.ok, result.line()
    budget = BUDGETS.get(number, DEFAULT_BUDGET)
    assert result.seconds < budget, (
        f"criterion {number} took {result.seconds:.1f}s, budget {budget:.0f}s"
    )
