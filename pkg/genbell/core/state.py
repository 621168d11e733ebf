"""Pure qubit states and the operations on them"""

from __future__ import annotations
from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from genbell.errors import DomainError, CapacityError

NORM_TOL = 1e-12
"""Tolerance on the unit norm of a pure state"""

IMPLICIT_MAX_QUBITS = 26
"""Largest qubit count a state vector may have"""


@dataclass(frozen=True, eq=False)
class PureState:
    """A unit-norm amplitude vector over n qubits

    Basis index k has binary expansion b_1 b_2 ... b_n with b_1 the most
    significant bit, so qubit 1 is the leftmost tensor factor. The state
    takes ownership of the array it is given and marks it read-only.
    """

    n: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"qubit count must be at least 1, got {self.n}")
        if self.n > IMPLICIT_MAX_QUBITS:
            raise CapacityError(f"{self.n} qubits is above the limit of {IMPLICIT_MAX_QUBITS}")

        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.ndim != 1 or amps.shape[0] != 1 << self.n:
            raise DomainError(f"expected {1 << self.n} amplitudes for {self.n} qubits, got shape {amps.shape}")

        if not np.all(np.isfinite(amps)):
            raise DomainError("amplitudes must be finite")
        norm = float(np.linalg.norm(amps))
        if not abs(norm - 1.0) <= NORM_TOL:
            raise DomainError(f"state norm is {norm!r}, expected 1 within {NORM_TOL}")

        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_amplitudes(cls, values: Union[np.ndarray, Iterable[complex]], normalize: bool = False) -> PureState:
        """Build a state from any amplitude sequence of length 2^n

        Args:
            values (Union[np.ndarray, Iterable[complex]]): The amplitudes
            normalize (bool, optional): Whether to rescale to unit norm. Defaults to False.

        Returns:
            PureState: A pure state
        """
        amps = np.array(values if isinstance(values, np.ndarray) else list(values), dtype=np.complex128)
        size = amps.shape[0] if amps.ndim == 1 else 0
        if size < 2 or size & (size - 1):
            raise DomainError(f"amplitude count must be a power of two of at least 2, got {size}")

        if normalize:
            norm = np.linalg.norm(amps)
            if norm == 0:
                raise DomainError("cannot normalize the zero vector")
            amps = amps / norm

        return cls(size.bit_length() - 1, amps)

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    def __len__(self) -> int:
        return self.dim

    def __repr__(self) -> str:
        return f"PureState(n={self.n}, amplitudes={self.amplitudes!r})"


def basis_state(n: int, k: int) -> PureState:
    """The k-th element of the standard basis of n qubits

    Args:
        n (int): Qubit count
        k (int): 0-based basis index

    Returns:
        PureState: |k>
    """
    if n < 1:
        raise DomainError(f"qubit count must be at least 1, got {n}")
    if n > IMPLICIT_MAX_QUBITS:
        raise CapacityError(f"{n} qubits is above the limit of {IMPLICIT_MAX_QUBITS}")
    if not 0 <= k < 1 << n:
        raise DomainError(f"basis index {k} out of range for {n} qubits")

    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[k] = 1.0
    return PureState(n, amps)


def tensor_states(a: PureState, b: PureState) -> PureState:
    """Tensor product a ⊗ b, with a the leading factor

    Args:
        a (PureState): Leading factor
        b (PureState): Trailing factor

    Returns:
        PureState: State on a.n + b.n qubits
    """
    if a.n + b.n > IMPLICIT_MAX_QUBITS:
        raise CapacityError(f"{a.n + b.n} qubits is above the limit of {IMPLICIT_MAX_QUBITS}")
    return PureState(a.n + b.n, np.outer(a.amplitudes, b.amplitudes).reshape(-1))


def conjugate_state(s: PureState) -> PureState:
    """Entrywise complex conjugate in the standard basis"""
    return PureState(s.n, np.conjugate(s.amplitudes))


def inner(a: PureState, b: PureState) -> complex:
    """<a|b>, conjugate-linear in the first slot

    Args:
        a (PureState): Bra
        b (PureState): Ket

    Returns:
        complex: The inner product
    """
    if a.dim != b.dim:
        raise DomainError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def phase_rotate(s: PureState, theta: float) -> PureState:
    """Multiply by the global phase e^{i theta}"""
    return PureState(s.n, s.amplitudes * np.exp(1j * theta))
