"""Acceptance sweeps, one test per criterion.

Each run prints a pass/fail line; `seifert-contact selftest` runs the
same sweeps from the command line.
"""

import pytest

from seifert_contact.selftest import CRITERIA


@pytest.mark.parametrize("number,name,check", CRITERIA, ids=[f"{n:02d}-{name}" for n, name, _ in CRITERIA])
def test_criterion(number, name, check):
    passed, detail = check()
    print(f"criterion {number} ({name}): {'PASS' if passed else 'FAIL'} - {detail}")
    assert passed, f"criterion {number} ({name}): {detail}"
