"""Acceptance criteria 1-13, one PASS/FAIL line each.

Every criterion is an exact identity check; see ``awdelta.verify`` for what
each one decides.  Lines are printed even under output capture.
"""
import subprocess
import sys

import pytest

from awdelta.verify import CRITERIA, run_criterion

SEED = 0


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, capsys):
    result = run_criterion(n, seed=SEED)
    if n == 13:
        # the part of criterion 13 that needs a separate process
        proc = subprocess.run([sys.executable, "-m", "awdelta", "verify", "all"],
                              capture_output=True, text=True)
        result.detail += f"; `verify all` exit status {proc.returncode}"
        result.ok = result.ok and proc.returncode == 0
    with capsys.disabled():
        print("\n" + result.line(), end="")
    assert result.ok, result.detail
