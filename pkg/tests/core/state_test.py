import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from genbell.core.state import PureState, basis_state, tensor_states, conjugate_state, inner, phase_rotate
from genbell.core.sampling import random_state, random_product_state
from genbell.errors import DomainError, CapacityError

SQRT1_2 = np.sqrt(0.5)


def test_basis_state():
    assert np.array_equal(basis_state(1, 0).amplitudes, [1, 0])
    assert np.array_equal(basis_state(2, 3).amplitudes, [0, 0, 0, 1])

    s = basis_state(3, 5)
    assert s.n == 3
    assert len(s) == 8
    assert s.amplitudes[5] == 1
    assert np.count_nonzero(s.amplitudes) == 1

    with pytest.raises(DomainError):
        basis_state(2, 4)
    with pytest.raises(DomainError):
        basis_state(0, 0)
    with pytest.raises(CapacityError):
        basis_state(27, 0)


def test_pure_state_validation():
    with pytest.raises(DomainError):
        PureState(2, np.array([1, 0, 0], dtype=np.complex128))
    with pytest.raises(DomainError):
        PureState(1, np.array([1, 1], dtype=np.complex128))

    s = PureState.from_amplitudes([1, 1], normalize=True)
    assert s.n == 1
    assert np.allclose(s.amplitudes, [SQRT1_2, SQRT1_2])

    with pytest.raises(DomainError):
        PureState.from_amplitudes([1, 0, 0])
    with pytest.raises(DomainError):
        PureState.from_amplitudes([0, 0], normalize=True)
    with pytest.raises(DomainError):
        PureState(2, np.array([np.nan, 0, 0, 0], dtype=np.complex128))
    with pytest.raises(DomainError):
        PureState(1, np.array([np.inf, 0], dtype=np.complex128))


def test_state_is_read_only():
    s = basis_state(2, 0)
    with pytest.raises(ValueError):
        s.amplitudes[0] = 0


def test_tensor_states():
    zero, one = basis_state(1, 0), basis_state(1, 1)
    assert np.array_equal(tensor_states(zero, one).amplitudes, [0, 1, 0, 0])
    assert np.array_equal(tensor_states(zero, zero).amplitudes, [1, 0, 0, 0])

    plus = PureState.from_amplitudes([SQRT1_2, SQRT1_2])
    minus = PureState.from_amplitudes([SQRT1_2, -SQRT1_2])
    got = tensor_states(plus, minus).amplitudes
    np.testing.assert_allclose(got, np.array([1, -1, 1, -1]) / 2, atol=1e-12)


def test_conjugate_state():
    assert np.array_equal(conjugate_state(basis_state(2, 0)).amplitudes, [1, 0, 0, 0])
    assert conjugate_state(PureState.from_amplitudes([1j, 0])).amplitudes[0] == -1j

    s = PureState.from_amplitudes([(1 + 1j) * SQRT1_2, 0])
    np.testing.assert_allclose(conjugate_state(s).amplitudes, [(1 - 1j) * SQRT1_2, 0], atol=1e-15)


def test_inner():
    zero, one = basis_state(1, 0), basis_state(1, 1)
    assert inner(zero, zero) == 1
    assert inner(zero, one) == 0

    i_state = PureState.from_amplitudes([1j, 0])
    assert inner(i_state, i_state) == pytest.approx(1)

    with pytest.raises(DomainError):
        inner(zero, basis_state(2, 0))


def test_phase_rotate():
    s = phase_rotate(basis_state(1, 0), np.pi / 2)
    assert s.amplitudes[0] == pytest.approx(1j)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 6), st.integers(0, 2**32 - 1))
def test_random_state_norm(n, seed):
    s = random_state(n, np.random.default_rng(seed))
    assert abs(inner(s, s) - 1) < 1e-12


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 6), st.integers(0, 2**32 - 1), st.data())
def test_random_product_state_factors(n, seed, data):
    cut = data.draw(st.integers(1, n - 1))
    s = random_product_state(n, cut, np.random.default_rng(seed))
    singular = np.linalg.svd(s.amplitudes.reshape(1 << cut, -1), compute_uv=False)
    assert singular[1] < 1e-10

    with pytest.raises(DomainError):
        random_product_state(n, n, np.random.default_rng(seed))
