"""Acceptance gate: every criterion runs at its stated tolerance.

One test per criterion; each prints its pass/fail line so the suite output
reads as the acceptance checklist.
"""

from __future__ import annotations

import pytest

from crosslimit.acceptance import ALL_CRITERIA


@pytest.mark.parametrize("criterion", ALL_CRITERIA, ids=lambda c: c.__name__)
def test_criterion(criterion):
    result = criterion()
    print(result.line())
    assert result.ok, "; ".join(result.details)
