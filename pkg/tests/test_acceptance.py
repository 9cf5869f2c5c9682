"""The nine acceptance criteria; each reports one PASS/FAIL line.

Run ``python tests/test_acceptance.py`` for the lines alone; under pytest
they are repeated in the terminal summary.
"""

import sys

import pytest

from platskein.acceptance import CRITERIA, run_criterion

RESULT_LINES: dict[int, str] = {}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    result = run_criterion(number)
    RESULT_LINES[number] = result.line()
    print(result.line())
    failed = [f"{c.label} {c.detail}".strip() for c in result.checks if not c.ok]
    assert result.ok, "; ".join(failed)


if __name__ == "__main__":
    results = [run_criterion(n) for n in sorted(CRITERIA)]
    for r in results:
        print(r.line())
    sys.exit(0 if all(r.ok for r in results) else 1)
