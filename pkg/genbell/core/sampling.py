"""Random states for property checks"""

from typing import Optional

import numpy as np

from genbell.core.state import PureState, tensor_states
from genbell.errors import DomainError


def _gaussian(rng: np.random.Generator, size: int) -> np.ndarray:
    vec = rng.standard_normal(size) + 1j * rng.standard_normal(size)
    return vec / np.linalg.norm(vec)


def random_state(n: int, rng: np.random.Generator) -> PureState:
    """A Haar-random state from a normalized complex Gaussian vector

    Args:
        n (int): Qubit count
        rng (np.random.Generator): Source of randomness

    Returns:
        PureState: A random state
    """
    return PureState(n, _gaussian(rng, 1 << n))


def random_product_state(n: int, n_1: int, rng: np.random.Generator) -> PureState:
    """A random product of an n_1-qubit state and an (n - n_1)-qubit state

    Args:
        n (int): Total qubit count
        n_1 (int): Qubits in the leading factor
        rng (np.random.Generator): Source of randomness

    Returns:
        PureState: phi_1 ⊗ phi_2
    """
    if not 1 <= n_1 <= n - 1:
        raise DomainError(f"split {n_1} out of range for {n} qubits")
    return tensor_states(random_state(n_1, rng), random_state(n - n_1, rng))


def random_real_unit_vector(size: int, rng: np.random.Generator, support: Optional[np.ndarray] = None) -> np.ndarray:
    """A random real unit vector, optionally restricted to a set of 0-based indices

    Args:
        size (int): Vector length
        rng (np.random.Generator): Source of randomness
        support (np.ndarray, optional): Indices allowed to be nonzero. Defaults to all.

    Returns:
        np.ndarray: A real vector of norm 1
    """
    vec = np.zeros(size)
    if support is None:
        vec = rng.standard_normal(size)
    else:
        vec[support] = rng.standard_normal(len(support))
    return vec / np.linalg.norm(vec)
