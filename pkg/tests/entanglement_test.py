import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from genbell.core.sampling import random_state, random_product_state
from genbell.core.state import PureState, basis_state, tensor_states, phase_rotate
from genbell.entanglement import (
    DensityMatrix2,
    SchmidtData,
    f_value,
    reduced_density_qubit,
    purity,
    mw_measure,
    schmidt,
    schmidt_spectra,
    is_product,
    ghz_state,
    l_witness,
)
from genbell.errors import DomainError
from genbell.gates import bell_state, apply_bell, apply_bell_adjoint

SQRT1_2 = np.sqrt(0.5)


def test_f_value():
    assert abs(f_value(ghz_state(3))) < 1e-12
    assert f_value(bell_state(2, 0)) == pytest.approx(-1, abs=1e-12)
    assert abs(f_value(basis_state(3, 5))) == 0

    with pytest.raises(DomainError):
        f_value(basis_state(1, 0))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 8), st.integers(0, 2**32 - 1), st.data())
def test_product_witness_zero(n, seed, data):
    cut = data.draw(st.integers(1, n - 1))
    s = random_product_state(n, cut, np.random.default_rng(seed))
    assert abs(f_value(s)) < 1e-10


def test_reduced_density_qubit():
    rho = reduced_density_qubit(basis_state(2, 1), 1)
    assert np.allclose(rho.entries, np.diag([1, 0]))

    for n in (2, 3, 5):
        for j in range(1, n + 1):
            assert np.allclose(reduced_density_qubit(ghz_state(n), j).entries, np.eye(2) / 2, atol=1e-12)

    assert np.allclose(reduced_density_qubit(bell_state(2, 0), 2).entries, np.eye(2) / 2, atol=1e-12)

    with pytest.raises(DomainError):
        reduced_density_qubit(ghz_state(3), 4)


def test_density_validation():
    with pytest.raises(DomainError):
        DensityMatrix2(np.diag([1.0, 1.0]))
    with pytest.raises(DomainError):
        DensityMatrix2(np.array([[0.5, 1.0], [0.0, 0.5]]))
    with pytest.raises(DomainError):
        DensityMatrix2(np.diag([1.5, -0.5]))
    with pytest.raises(DomainError):
        DensityMatrix2(np.array([[np.nan, 0.0], [0.0, 1.0]]))


def test_purity():
    assert purity(DensityMatrix2(np.diag([1.0, 0.0]))) == pytest.approx(1)
    assert purity(DensityMatrix2(np.diag([0.5, 0.5]))) == pytest.approx(0.5)
    assert purity(DensityMatrix2(np.diag([0.75, 0.25]))) == pytest.approx(5 / 8)


def test_mw_measure():
    for k in range(8):
        assert abs(mw_measure(basis_state(3, k))) < 1e-12
    for n in range(2, 8):
        assert abs(mw_measure(ghz_state(n)) - 1) < 1e-10

    with pytest.raises(DomainError):
        mw_measure(basis_state(1, 0))


def test_mw_measure_tolerates_norm_drift():
    s = PureState(2, np.array([1 + 9e-13, 0, 0, 0], dtype=np.complex128))
    assert np.real(np.trace(reduced_density_qubit(s, 1).entries)) == pytest.approx(1, abs=1e-15)
    assert abs(mw_measure(s)) < 1e-12

    drifted = PureState(3, ghz_state(3).amplitudes * (1 + 9e-13))
    assert abs(mw_measure(drifted) - 1) < 1e-10


def test_bell_states_maximal():
    for n in range(2, 7):
        for k in range(1 << n):
            assert abs(mw_measure(bell_state(n, k)) - 1) < 1e-10
            assert abs(abs(f_value(bell_state(n, k))) - 1) < 1e-10


def test_phase_invariance():
    s = random_state(4, np.random.default_rng(11))
    rotated = phase_rotate(s, 1.234)
    assert mw_measure(rotated) == pytest.approx(mw_measure(s), abs=1e-12)
    assert abs(f_value(rotated)) == pytest.approx(abs(f_value(s)), abs=1e-12)


def test_schmidt():
    data = schmidt(bell_state(2, 0), 1)
    np.testing.assert_allclose(data.coefficients, [SQRT1_2, SQRT1_2], atol=1e-12)
    assert data.rank == 2

    np.testing.assert_allclose(schmidt(ghz_state(3), 1).coefficients, [SQRT1_2, SQRT1_2], atol=1e-12)

    product = random_product_state(5, 2, np.random.default_rng(5))
    coeffs = schmidt(product, 2).coefficients
    assert coeffs[0] == pytest.approx(1, abs=1e-12)
    assert np.all(coeffs[1:] == 0)

    with pytest.raises(DomainError):
        schmidt(ghz_state(3), 3)


def test_schmidt_data_validation():
    assert SchmidtData(1, np.array([1.0, 0.0])).rank == 1

    with pytest.raises(DomainError):
        SchmidtData(1, np.array([0.5, 0.5]))
    with pytest.raises(DomainError):
        SchmidtData(1, np.array([1.0, -0.0001]))
    with pytest.raises(DomainError):
        SchmidtData(1, np.array([0.6, 0.8]))
    with pytest.raises(DomainError):
        SchmidtData(0, np.array([1.0]))
    with pytest.raises(DomainError):
        SchmidtData(1, np.array([np.nan, 0.0]))


def test_schmidt_vectors():
    s = random_state(5, np.random.default_rng(9))
    data = schmidt(s, 2, vectors=True)
    rebuilt = (data.left * data.coefficients) @ data.right.T
    assert np.max(np.abs(rebuilt.reshape(-1) - s.amplitudes)) < 1e-12


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 8), st.integers(0, 2**32 - 1))
def test_schmidt_purity_identity(n, seed):
    s = random_state(n, np.random.default_rng(seed))
    for data in schmidt_spectra(s):
        mat = s.amplitudes.reshape(1 << data.cut, -1)
        rho = mat @ mat.conj().T
        assert abs(data.purity() - np.trace(rho @ rho).real) < 1e-10
        assert abs(np.sum(data.coefficients**2) - 1) < 1e-10
        assert np.all(np.diff(data.coefficients) <= 0)


def test_is_product():
    verdict = is_product(basis_state(4, 5))
    assert verdict.is_product and verdict.cut == 1

    assert not is_product(ghz_state(2))

    verdict = is_product(tensor_states(basis_state(1, 0), ghz_state(2)))
    assert verdict
    assert verdict.cut == 1

    verdict = is_product(tensor_states(ghz_state(2), ghz_state(2)))
    assert verdict.cut == 2


def test_ghz_state():
    np.testing.assert_allclose(ghz_state(2).amplitudes, [SQRT1_2, 0, 0, SQRT1_2])
    amps = ghz_state(3).amplitudes
    assert set(np.flatnonzero(amps)) == {0, 7}
    np.testing.assert_allclose(ghz_state(1).amplitudes, [SQRT1_2, SQRT1_2])

    with pytest.raises(DomainError):
        ghz_state(0)


def test_ghz_dichotomy():
    assert np.max(np.abs(ghz_state(2).amplitudes - bell_state(2, 0).amplitudes)) < 1e-12
    assert abs(abs(f_value(ghz_state(2))) - 1) < 1e-12
    for n in range(3, 11):
        assert abs(f_value(ghz_state(n))) < 1e-12
        assert abs(mw_measure(ghz_state(n)) - 1) < 1e-10


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 8), st.integers(0, 2**32 - 1))
def test_witness_transfer(n, seed):
    phi = random_state(n, np.random.default_rng(seed))
    assert abs(l_witness(phi) - f_value(apply_bell(phi))) < 1e-10


def test_ghz_preimage_not_witnessed():
    for n in range(3, 8):
        phi = apply_bell_adjoint(ghz_state(n))
        assert abs(l_witness(phi)) < 1e-10
        assert abs(mw_measure(apply_bell(phi)) - 1) < 1e-10
