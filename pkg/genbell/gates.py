"""Named operators: Pauli, Hadamard/Walsh, projectors, M, the generalized CNOT and the Bell matrix

Every operator can be built densely for n <= 14. The ones needed at scale
(CNOT_{2^n}, the Walsh head H_{2^{n-1}} ⊗ I_2, and M_{2^n}) also have
implicit kernels that never materialize a matrix.
"""

from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Optional
import logging

import numpy as np

from genbell.core.state import PureState, basis_state, IMPLICIT_MAX_QUBITS
from genbell.core.operator import DenseOperator, DENSE_MAX_QUBITS, identity, kron
from genbell.errors import DomainError, CapacityError

SQRT1_2 = 0.7071067811865475

PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
HADAMARD = SQRT1_2 * np.array([[1, 1], [1, -1]], dtype=np.complex128)
PROJ_L = np.array([[1, 0], [0, 0]], dtype=np.complex128)
PROJ_R = np.array([[0, 0], [0, 1]], dtype=np.complex128)

BUTTERFLY_CHUNK = 1 << 16
"""Elements per butterfly block, bounding the scratch space of the Walsh kernel"""


class GateKind(str, Enum):
    """The operators genbell knows how to build"""

    PAULI_X = "PauliX"
    PAULI_Y = "PauliY"
    PAULI_Z = "PauliZ"
    HADAMARD = "Hadamard"
    PROJ_L = "ProjL"
    PROJ_R = "ProjR"
    WALSH = "Walsh"
    """H_2 ⊗ ... ⊗ H_2, n factors"""

    M = "M"
    """sigma_y ⊗ I_{2^{n-2}} ⊗ sigma_y"""

    CNOT_GEN = "CnotGen"
    """L ⊗ I_{2^{n-1}} + R ⊗ sigma_x ⊗ ... ⊗ sigma_x"""

    BELL = "Bell"
    """CNOT_{2^n} (H_{2^{n-1}} ⊗ I_2)"""

    L_MATRIX = "LMatrix"
    """B^† M B, equal to -sigma_z ⊗ ... ⊗ sigma_z"""

    @property
    def sized(self) -> bool:
        return self in _MIN_QUBITS


_SINGLE_QUBIT = {
    GateKind.PAULI_X: PAULI_X,
    GateKind.PAULI_Y: PAULI_Y,
    GateKind.PAULI_Z: PAULI_Z,
    GateKind.HADAMARD: HADAMARD,
    GateKind.PROJ_L: PROJ_L,
    GateKind.PROJ_R: PROJ_R,
}

_MIN_QUBITS = {
    GateKind.WALSH: 1,
    GateKind.M: 2,
    GateKind.CNOT_GEN: 2,
    GateKind.BELL: 2,
    GateKind.L_MATRIX: 1,
}


@dataclass(frozen=True)
class GateTag:
    """Names one operator, with its qubit count for the sized families"""

    kind: GateKind
    n: Optional[int] = None

    def __post_init__(self) -> None:
        kind = GateKind(self.kind)
        object.__setattr__(self, "kind", kind)

        if kind.sized:
            if self.n is None:
                raise DomainError(f"{kind.value} needs a qubit count")
            if self.n < _MIN_QUBITS[kind]:
                raise DomainError(f"{kind.value} needs at least {_MIN_QUBITS[kind]} qubits, got {self.n}")
            if self.n > IMPLICIT_MAX_QUBITS:
                raise CapacityError(f"{self.n} qubits is above the limit of {IMPLICIT_MAX_QUBITS}")
        elif self.n not in (None, 1):
            raise DomainError(f"{kind.value} acts on a single qubit, got n={self.n}")

    @property
    def qubits(self) -> int:
        return 1 if self.n is None else self.n

    @classmethod
    def parse(cls, s: str) -> GateTag:
        """Parse 'PauliX', 'M(3)', 'Bell(4)' and the like

        Args:
            s (str): Tag string

        Returns:
            GateTag: The tag
        """
        s = s.strip()
        if s.endswith(")") and "(" in s:
            name, _, arg = s[:-1].partition("(")
            try:
                return cls(GateKind(name.strip()), int(arg))
            except ValueError as e:
                if isinstance(e, (DomainError, CapacityError)):
                    raise
                raise DomainError(f"could not parse gate tag '{s}'")
        try:
            return cls(GateKind(s))
        except ValueError:
            raise DomainError(f"unknown gate '{s}'")

    def __str__(self) -> str:
        if self.kind.sized:
            return f"{self.kind.value}({self.n})"
        return self.kind.value


def _kron_all(*mats: np.ndarray) -> np.ndarray:
    return reduce(np.kron, mats)


def dense(tag: GateTag) -> DenseOperator:
    """Materialize an operator as a matrix

    Args:
        tag (GateTag): Operator to build

    Returns:
        DenseOperator: The exact matrix
    """
    if tag.qubits > DENSE_MAX_QUBITS:
        raise CapacityError(f"{tag} is above the dense limit of {DENSE_MAX_QUBITS} qubits")

    kind = tag.kind
    if kind in _SINGLE_QUBIT:
        return DenseOperator(_SINGLE_QUBIT[kind].copy())

    n = tag.qubits
    if kind == GateKind.WALSH:
        return DenseOperator(_kron_all(*([HADAMARD] * n)))

    if kind == GateKind.M:
        return kron(kron(DenseOperator(PAULI_Y), identity(n - 2)), DenseOperator(PAULI_Y))

    if kind == GateKind.CNOT_GEN:
        flips = DenseOperator(_kron_all(*([PAULI_X] * (n - 1))))
        return kron(DenseOperator(PROJ_L), identity(n - 1)) + kron(DenseOperator(PROJ_R), flips)

    if kind == GateKind.BELL:
        head = kron(dense(GateTag(GateKind.WALSH, n - 1)), identity(1))
        return dense(GateTag(GateKind.CNOT_GEN, n)) @ head

    if kind == GateKind.L_MATRIX:
        return DenseOperator(-_kron_all(*([PAULI_Z] * n)))

    raise DomainError(f"no dense realization for {tag}")


def _require_register(s: PureState) -> None:
    if s.n < 2:
        raise DomainError(f"operator needs at least 2 qubits, got {s.n}")


def apply_cnot_gen(s: PureState) -> PureState:
    """CNOT_{2^n}: when qubit 1 is set, flip every other qubit

    Complementing the low n - 1 bits of an index reverses the upper half of
    the vector, so the whole gate is a copy and a reversed copy.

    Args:
        s (PureState): State on n >= 2 qubits

    Returns:
        PureState: CNOT_{2^n} |s>
    """
    _require_register(s)
    half = s.dim >> 1
    out = np.empty(s.dim, dtype=np.complex128)
    out[:half] = s.amplitudes[:half]
    out[half:] = s.amplitudes[half:][::-1]
    return PureState(s.n, out)


def _butterfly(top: np.ndarray, bottom: np.ndarray) -> None:
    diff = top - bottom
    top += bottom
    bottom[...] = diff


def _hadamard_pass(out: np.ndarray, n: int, qubit: int) -> None:
    # unnormalized (t, b) -> (t + b, t - b) on the given 1-based qubit axis
    outer = 1 << (qubit - 1)
    inner_ = 1 << (n - qubit)
    view = out.reshape(outer, 2, inner_)
    if inner_ >= BUTTERFLY_CHUNK:
        for row in range(outer):
            for start in range(0, inner_, BUTTERFLY_CHUNK):
                stop = start + BUTTERFLY_CHUNK
                _butterfly(view[row, 0, start:stop], view[row, 1, start:stop])
    else:
        rows = max(1, BUTTERFLY_CHUNK // inner_)
        for start in range(0, outer, rows):
            _butterfly(view[start : start + rows, 0, :], view[start : start + rows, 1, :])


def apply_walsh_head(s: PureState) -> PureState:
    """H_{2^{n-1}} ⊗ I_2: a Hadamard on each of qubits 1 ... n-1

    Args:
        s (PureState): State on n >= 2 qubits

    Returns:
        PureState: The transformed state
    """
    _require_register(s)
    out = np.array(s.amplitudes, dtype=np.complex128)
    for qubit in range(1, s.n):
        _hadamard_pass(out, s.n, qubit)
    out *= 2.0 ** (-(s.n - 1) / 2)
    return PureState(s.n, out)


def apply_bell(s: PureState) -> PureState:
    """B_{2^n} = CNOT_{2^n} (H_{2^{n-1}} ⊗ I_2) applied implicitly"""
    return apply_cnot_gen(apply_walsh_head(s))


def apply_bell_adjoint(s: PureState) -> PureState:
    """B_{2^n}^† = (H_{2^{n-1}} ⊗ I_2) CNOT_{2^n}, both factors being self-inverse"""
    return apply_walsh_head(apply_cnot_gen(s))


def bell_state(n: int, k: int) -> PureState:
    """The k-th 2^n-dimensional Bell state B_{2^n}|k>

    Args:
        n (int): Qubit count, 2 <= n <= 26
        k (int): Basis index, 0 <= k < 2^n

    Returns:
        PureState: |b_k>
    """
    if n < 2:
        raise DomainError(f"Bell states need at least 2 qubits, got {n}")
    if n > IMPLICIT_MAX_QUBITS:
        raise CapacityError(f"{n} qubits is above the limit of {IMPLICIT_MAX_QUBITS}")
    if not 0 <= k < 1 << n:
        raise DomainError(f"basis index {k} out of range for {n} qubits")

    logging.debug(f"building Bell state n={n} k={k}")
    return apply_bell(basis_state(n, k))


def _sigma_y_phase_exponent(bit: int) -> int:
    # sigma_y|0> = i|1>, sigma_y|1> = -i|0> = i^3|0>
    return 1 if bit == 0 else 3


def _m_output_signs() -> np.ndarray:
    signs = np.empty((2, 2))
    for first in (0, 1):
        for last in (0, 1):
            exponent = (_sigma_y_phase_exponent(first) + _sigma_y_phase_exponent(last)) % 4
            if exponent % 2:
                raise ArithmeticError(f"M phase i^{exponent} is not real")
            # indexed by the output bits, which are the complemented input bits
            signs[1 - first, 1 - last] = 1.0 if exponent == 0 else -1.0
    return signs


_M_SIGNS = _m_output_signs()


def apply_m(s: PureState) -> PureState:
    """M_{2^n} = sigma_y ⊗ I_{2^{n-2}} ⊗ sigma_y applied implicitly

    Index k moves to k with its first and last bits complemented, picking up
    a real sign from the two sigma_y phases.

    Args:
        s (PureState): State on n >= 2 qubits

    Returns:
        PureState: M_{2^n} |s>
    """
    _require_register(s)
    view = s.amplitudes.reshape(2, s.dim >> 2, 2)
    out = view[::-1, :, ::-1] * _M_SIGNS[:, None, :]
    return PureState(s.n, out.reshape(-1))


def l_matrix_diag(n: int) -> np.ndarray:
    """Diagonal of L_{2^n} = -sigma_z ⊗ ... ⊗ sigma_z

    Entry j is -(-1)^{popcount(j)}, built as a Kronecker product of sigma_z
    diagonals.

    Args:
        n (int): Qubit count, n >= 1

    Returns:
        np.ndarray: Real vector of length 2^n with entries in {-1, 1}
    """
    if n < 1:
        raise DomainError(f"qubit count must be at least 1, got {n}")
    if n > IMPLICIT_MAX_QUBITS:
        raise CapacityError(f"{n} qubits is above the limit of {IMPLICIT_MAX_QUBITS}")

    diag = np.ones(1)
    z = np.array([1.0, -1.0])
    for _ in range(n):
        diag = np.kron(diag, z)
    return -diag
