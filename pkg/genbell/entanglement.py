"""The antilinear witness F, single-qubit reduced states, the Meyer-Wallach measure and Schmidt spectra"""

from __future__ import annotations
from dataclasses import dataclass
from typing import Optional, List
import logging

import numpy as np

from genbell.core.state import PureState, conjugate_state, inner, IMPLICIT_MAX_QUBITS
from genbell.gates import apply_m, l_matrix_diag
from genbell.errors import DomainError, CapacityError

DENSITY_TOL = 1e-12
SCHMIDT_FLOOR = 1e-13
"""Schmidt coefficients below this are SVD noise and read as zero"""

SCHMIDT_TOL = 1e-10
DEFAULT_PRODUCT_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class DensityMatrix2:
    """A single-qubit density matrix: Hermitian, trace one, positive semidefinite"""

    entries: np.ndarray

    def __post_init__(self) -> None:
        rho = np.asarray(self.entries, dtype=np.complex128)
        if rho.shape != (2, 2):
            raise DomainError(f"expected a 2x2 matrix, got shape {rho.shape}")
        if not np.all(np.isfinite(rho)):
            raise DomainError("density matrix entries must be finite")
        if not np.max(np.abs(rho - rho.conj().T)) <= DENSITY_TOL:
            raise DomainError("density matrix is not Hermitian")
        if not abs(np.trace(rho) - 1.0) <= DENSITY_TOL:
            raise DomainError(f"density matrix trace is {np.trace(rho)!r}, expected 1")
        if not np.min(np.linalg.eigvalsh(rho)) >= -DENSITY_TOL:
            raise DomainError("density matrix has a negative eigenvalue")

        rho.flags.writeable = False
        object.__setattr__(self, "entries", rho)


@dataclass(frozen=True, eq=False)
class SchmidtData:
    """Schmidt coefficients of a state across the cut after qubit `cut`

    When requested, `left[:, k]` and `right[:, k]` hold the Schmidt vectors
    phi_k^A and phi_k^B so that psi = sum_k c_k phi_k^A ⊗ phi_k^B.
    """

    cut: int
    coefficients: np.ndarray
    left: Optional[np.ndarray] = None
    right: Optional[np.ndarray] = None

    def __post_init__(self) -> None:
        if self.cut < 1:
            raise DomainError(f"cut must be at least 1, got {self.cut}")
        c = np.asarray(self.coefficients, dtype=np.float64)
        if c.ndim != 1 or c.shape[0] == 0:
            raise DomainError("coefficients must be a non-empty vector")
        if not np.all(np.isfinite(c)):
            raise DomainError("coefficients must be finite")
        if np.any(c < 0):
            raise DomainError("coefficients must be non-negative")
        if np.any(np.diff(c) > 0):
            raise DomainError("coefficients must be non-increasing")
        if not abs(float(np.sum(c**2)) - 1.0) <= SCHMIDT_TOL:
            raise DomainError(f"squared coefficients must sum to 1, got {float(np.sum(c**2))!r}")
        object.__setattr__(self, "coefficients", c)

    @property
    def rank(self) -> int:
        return int(np.count_nonzero(self.coefficients))

    def purity(self) -> float:
        """Tr[rho_A^2], the sum of the fourth powers of the coefficients"""
        return float(np.sum(self.coefficients**4))


@dataclass(frozen=True)
class ProductVerdict:
    """Whether a state factors across some contiguous cut, and the first such cut"""

    is_product: bool
    cut: Optional[int] = None

    def __bool__(self) -> bool:
        return self.is_product


def _require_register(s: PureState) -> None:
    if s.n < 2:
        raise DomainError(f"entanglement needs at least 2 qubits, got {s.n}")


def f_value(s: PureState) -> complex:
    """F(psi) = <psi| M_{2^n} |conj(psi)>, zero on product states

    Args:
        s (PureState): State on n >= 2 qubits

    Returns:
        complex: The witness value, of modulus at most 1
    """
    _require_register(s)
    return inner(s, apply_m(conjugate_state(s)))


def reduced_density_qubit(s: PureState, j: int) -> DensityMatrix2:
    """The state of qubit j with every other qubit traced out

    Args:
        s (PureState): The state
        j (int): 1-based qubit position

    Returns:
        DensityMatrix2: rho_j
    """
    if not 1 <= j <= s.n:
        raise DomainError(f"qubit {j} out of range for {s.n} qubits")

    view = s.amplitudes.reshape(1 << (j - 1), 2, 1 << (s.n - j))
    zero = view[:, 0, :]
    one = view[:, 1, :]
    rho_00 = np.vdot(zero, zero).real
    rho_11 = np.vdot(one, one).real
    rho_01 = np.vdot(one, zero)
    rho = np.array([[rho_00, rho_01], [np.conj(rho_01), rho_11]], dtype=np.complex128)
    # trace is the squared state norm
    return DensityMatrix2(rho / (rho_00 + rho_11))


def purity(rho: DensityMatrix2) -> float:
    """Tr[rho^2]"""
    return float(np.sum(np.abs(rho.entries) ** 2))


def mw_measure(s: PureState) -> float:
    """Meyer-Wallach measure Q = 2 (1 - mean_j Tr[rho_j^2])

    Args:
        s (PureState): State on n >= 2 qubits

    Returns:
        float: Q in [0, 1]
    """
    _require_register(s)
    total = 0.0
    for j in range(1, s.n + 1):
        total += purity(reduced_density_qubit(s, j))
    return 2.0 * (1.0 - total / s.n)


def schmidt(s: PureState, n_1: int, vectors: bool = False) -> SchmidtData:
    """Schmidt decomposition across the first n_1 qubits and the rest

    Args:
        s (PureState): The state
        n_1 (int): Qubits on the leading side, 1 <= n_1 <= n - 1
        vectors (bool, optional): Whether to also return the Schmidt bases. Defaults to False.

    Returns:
        SchmidtData: Nonincreasing coefficients with squares summing to one
    """
    if not 1 <= n_1 <= s.n - 1:
        raise DomainError(f"split {n_1} out of range for {s.n} qubits")

    mat = s.amplitudes.reshape(1 << n_1, 1 << (s.n - n_1))
    if vectors:
        u, coeffs, vh = np.linalg.svd(mat, full_matrices=False)
    else:
        coeffs = np.linalg.svd(mat, compute_uv=False)

    coeffs = np.where(coeffs < SCHMIDT_FLOOR, 0.0, coeffs)
    if vectors:
        return SchmidtData(n_1, coeffs, left=u, right=vh.T)
    return SchmidtData(n_1, coeffs)


def is_product(s: PureState, tol: float = DEFAULT_PRODUCT_TOL) -> ProductVerdict:
    """Whether psi = phi_1 ⊗ phi_2 across some contiguous cut

    Args:
        s (PureState): State on n >= 2 qubits
        tol (float, optional): Largest second Schmidt coefficient read as zero. Defaults to 1e-10.

    Returns:
        ProductVerdict: The verdict with the first factoring cut
    """
    _require_register(s)
    for cut in range(1, s.n):
        coeffs = schmidt(s, cut).coefficients
        if coeffs[1] < tol:
            logging.debug(f"state factors at cut {cut}")
            return ProductVerdict(True, cut)
    return ProductVerdict(False)


def schmidt_spectra(s: PureState) -> List[SchmidtData]:
    """Schmidt data for every contiguous cut"""
    return [schmidt(s, cut) for cut in range(1, s.n)]


def ghz_state(n: int) -> PureState:
    """(|0...0> + |1...1>) / sqrt(2)

    Args:
        n (int): Qubit count

    Returns:
        PureState: |GHZ_n>
    """
    if n < 1:
        raise DomainError(f"qubit count must be at least 1, got {n}")
    if n > IMPLICIT_MAX_QUBITS:
        raise CapacityError(f"{n} qubits is above the limit of {IMPLICIT_MAX_QUBITS}")

    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[0] = amps[-1] = np.sqrt(0.5)
    return PureState(n, amps)


def l_witness(phi: PureState) -> complex:
    """<phi| L_{2^n} |conj(phi)>, computed from the diagonal of L_{2^n}

    Because B_{2^n} is real this equals F(B_{2^n} phi), so modulus one here
    means B_{2^n} phi is maximally entangled.

    Args:
        phi (PureState): State on n >= 2 qubits

    Returns:
        complex: The witness value
    """
    _require_register(phi)
    conj = np.conj(phi.amplitudes)
    return complex(np.sum(l_matrix_diag(phi.n) * conj * conj))
