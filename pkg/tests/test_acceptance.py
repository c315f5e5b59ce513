"""The twelve acceptance criteria at their stated tolerances.

Each test prints a single PASS/FAIL line; the lines are repeated in the pytest
terminal summary.  Run ``python tests/test_acceptance.py`` to get only the table.
"""

import sys

import pytest

from logenriques import acceptance

import conftest

SEED = 7


@pytest.mark.parametrize("number", sorted(acceptance.CRITERIA))
def test_criterion(number):
    res = acceptance.CRITERIA[number](SEED)
    line = res.line()
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)
    assert res.passed, line


if __name__ == "__main__":
    results = acceptance.run(SEED, echo=print)
    sys.exit(0 if all(r.passed for r in results) else 1)
