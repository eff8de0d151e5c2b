"""Acceptance gate: every headline numeric claim, one pass/fail line each.

Run with `pytest -v -s tests/test_acceptance.py` to see the lines as they
print.  The same checks back the `levhom verify` CLI command.
"""

import pytest

from levhom.verify import ALL_CHECKS, VerifyConfig

CFG = VerifyConfig()


@pytest.mark.parametrize("check", ALL_CHECKS, ids=lambda c: c.__name__.removeprefix("check_"))
def test_acceptance(check, capsys):
    result = check(CFG)
    status = "PASS" if result.passed else "FAIL"
    note = f"  ({result.note})" if result.note else ""
    with capsys.disabled():  # one visible line per criterion, even without -s
        print(f"\n{status} {result.name}: measured={result.measured:.6g} "
              f"threshold={result.threshold:.6g}{note}")
    assert result.passed, f"{result.name}: {result.note}"
