"""One test per acceptance criterion; each prints a single verdict line.

Run with -s to see the lines as they happen; the selftest CLI command
prints the same report.
"""

import sys

import pytest

from blockprim import acceptance


@pytest.mark.parametrize(
    "criterion", acceptance.CRITERIA, ids=[c[0] for c in acceptance.CRITERIA]
)
def test_criterion(criterion):
    name, limit, fn = criterion
    result = acceptance.run_one(name, limit, fn)
    line = "[{}] {} ({:.2f}s <= {:.0f}s) {}".format(
        "PASS" if result.passed else "FAIL",
        result.name, result.elapsed, result.limit, result.detail,
    )
    print(line, file=sys.stderr)
    assert result.passed, result.detail
    assert result.elapsed <= result.limit
