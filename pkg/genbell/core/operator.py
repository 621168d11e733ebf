"""Dense operators on qubit registers"""

from __future__ import annotations
from dataclasses import dataclass

import numpy as np

from genbell.errors import DomainError, CapacityError
from genbell.core.state import PureState

DENSE_MAX_QUBITS = 14
"""Largest qubit count an operator may be materialized for"""


@dataclass(frozen=True, eq=False)
class DenseOperator:
    """A square 2^n x 2^n complex matrix"""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        mat = np.asarray(self.matrix, dtype=np.complex128)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise DomainError(f"operator must be a square matrix, got shape {mat.shape}")

        dim = mat.shape[0]
        if dim < 2 or dim & (dim - 1):
            raise DomainError(f"operator dimension must be a power of two, got {dim}")
        if dim > 1 << DENSE_MAX_QUBITS:
            raise CapacityError(f"dense operators are capped at {DENSE_MAX_QUBITS} qubits")

        mat.flags.writeable = False
        object.__setattr__(self, "matrix", mat)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def n(self) -> int:
        return self.dim.bit_length() - 1

    def adjoint(self) -> DenseOperator:
        return DenseOperator(self.matrix.conj().T.copy())

    def __matmul__(self, other: DenseOperator) -> DenseOperator:
        if self.dim != other.dim:
            raise DomainError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return DenseOperator(self.matrix @ other.matrix)

    def __add__(self, other: DenseOperator) -> DenseOperator:
        if self.dim != other.dim:
            raise DomainError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return DenseOperator(self.matrix + other.matrix)

    def __repr__(self) -> str:
        return f"DenseOperator(dim={self.dim}, matrix={self.matrix!r})"


def identity(n: int) -> DenseOperator:
    """I_{2^n}"""
    if n > DENSE_MAX_QUBITS:
        raise CapacityError(f"dense operators are capped at {DENSE_MAX_QUBITS} qubits")
    return DenseOperator(np.eye(1 << n, dtype=np.complex128))


def kron(a: DenseOperator, b: DenseOperator) -> DenseOperator:
    """Kronecker product a ⊗ b

    Args:
        a (DenseOperator): Leading factor
        b (DenseOperator): Trailing factor

    Returns:
        DenseOperator: The product, of dimension a.dim * b.dim
    """
    if a.n + b.n > DENSE_MAX_QUBITS:
        raise CapacityError(f"dense operators are capped at {DENSE_MAX_QUBITS} qubits")
    return DenseOperator(np.kron(a.matrix, b.matrix))


def apply_dense_raw(op: DenseOperator, vector: np.ndarray) -> np.ndarray:
    """Matrix-vector product with no normalization requirement

    Args:
        op (DenseOperator): Operator to apply
        vector (np.ndarray): A vector of length op.dim

    Returns:
        np.ndarray: op @ vector
    """
    vec = np.asarray(vector, dtype=np.complex128)
    if vec.shape != (op.dim,):
        raise DomainError(f"dimension mismatch: operator is {op.dim}, vector has shape {vec.shape}")
    return op.matrix @ vec


def apply_dense(op: DenseOperator, s: PureState) -> PureState:
    """Apply a norm-preserving operator to a state

    Args:
        op (DenseOperator): A unitary operator
        s (PureState): The state

    Returns:
        PureState: op |s>
    """
    if op.dim != s.dim:
        raise DomainError(f"dimension mismatch: operator is {op.dim}, state is {s.dim}")
    return PureState(s.n, op.matrix @ s.amplitudes)
