import numpy as np
import pytest

from genbell import gates, verify
from genbell.core.state import PureState
from genbell.errors import DomainError


def test_suite_passes():
    results = verify.run_suite(seed=42, max_n=6, trials=20)
    assert [res.name for res in results] == verify.property_names()
    for res in results:
        assert res.passed, res.summary()
        assert res.checks > 0


def test_deterministic():
    a = [res.summary() for res in verify.run_suite(seed=7, max_n=4, trials=10)]
    b = [res.summary() for res in verify.run_suite(seed=7, max_n=4, trials=10)]
    assert a == b


def test_only_matches_full_run():
    full = {res.name: res.summary() for res in verify.run_suite(seed=3, max_n=4, trials=10)}
    only = verify.run_suite(seed=3, max_n=4, trials=10, only=["witness_transfer"])
    assert len(only) == 1
    assert only[0].summary() == full["witness_transfer"]


def test_bad_arguments():
    with pytest.raises(DomainError):
        verify.run_suite(seed=1, max_n=1, trials=10)
    with pytest.raises(DomainError):
        verify.run_suite(seed=1, max_n=13, trials=10)
    with pytest.raises(DomainError):
        verify.run_suite(seed=1, max_n=4, trials=0)
    with pytest.raises(DomainError):
        verify.run_suite(seed=1, max_n=4, trials=1, only=["nope"])


def test_sign_flip_is_caught(monkeypatch):
    original = gates.apply_m

    def flipped(s: PureState) -> PureState:
        return PureState(s.n, -original(s).amplitudes)

    monkeypatch.setattr(gates, "apply_m", flipped)
    res = verify.run_property("dense_implicit_agreement", seed=42, max_n=4, trials=5)
    assert not res.passed
    assert "kernel=m" in res.failing_instance
    assert "status=fail" in res.summary()


def test_property_result():
    res = verify.PropertyResult("x")
    res.check(1e-13, 1e-12, "a")
    assert res.passed
    res.check(1e-3, 1e-12, "b")
    res.check(1e-2, 1e-12, "c")
    assert not res.passed
    assert res.failures == 2
    assert res.failing_instance == "b"
    assert res.worst == pytest.approx(1e-2)
    res.check(float(np.nan), 1e-12, "d")
    assert res.failures == 3
