import pytest

from awdelta import verify
from awdelta.cli import run_command
from awdelta.verify import CheckResult, run_criterion, run_suite


def test_suites_cover_every_criterion():
    covered = {n for name, ns in verify.SUITES.items() if name != "all" for n in ns}
    assert covered == set(verify.CRITERIA) == set(verify.SUITES["all"])


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")


def test_same_seed_same_report():
    a = [r.to_dict() for r in run_suite("diamond", seed=3, max_degree=3)]
    b = [r.to_dict() for r in run_suite("diamond", seed=3, max_degree=3)]
    assert a == b


def test_crash_is_reported_as_failure(monkeypatch):
    def boom(rng, deg):
        raise RuntimeError("kaput")

    monkeypatch.setitem(verify.CRITERIA, 4, boom)
    r = run_criterion(4)
    assert not r.ok and "kaput" in r.detail


def test_failed_verification_exit_status(monkeypatch):
    monkeypatch.setitem(verify.CRITERIA, 4, lambda rng, deg: CheckResult(4, "x", False, "forced"))
    status, out, _ = run_command(["verify", "presentation"])
    assert status == 3 and "[FAIL]" in out
