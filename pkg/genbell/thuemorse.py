"""The Thue-Morse sequence and the diagonal of L_{2^n}

Positions here are 1-based (tau_1 = 0) to match the sequence's usual
definition. The only conversion to 0-based basis indices happens in
`l_diag_via_thue` and `real_support_criterion`.
"""

from __future__ import annotations
from dataclasses import dataclass
from enum import Enum

import numpy as np

from genbell.errors import DomainError, CapacityError

MAX_EXPONENT = 26
SUPPORT_TOL = 1e-10


def tau(i: int) -> int:
    """tau_i as the parity of the number of ones in i - 1

    Args:
        i (int): 1-based position

    Returns:
        int: 0 or 1
    """
    if i < 1:
        raise DomainError(f"Thue-Morse positions start at 1, got {i}")
    return bin(i - 1).count("1") & 1


def tau_recursive(i: int) -> int:
    """tau_i from tau_1 = 0, tau_{2m} = 1 - tau_m, tau_{2m-1} = tau_m

    Args:
        i (int): 1-based position

    Returns:
        int: 0 or 1
    """
    if i < 1:
        raise DomainError(f"Thue-Morse positions start at 1, got {i}")
    value = 0
    while i > 1:
        if i % 2 == 0:
            value ^= 1
            i //= 2
        else:
            i = (i + 1) // 2
    return value


def tau_array(positions: np.ndarray) -> np.ndarray:
    """Vectorized `tau` over an array of 1-based positions"""
    idx = np.asarray(positions, dtype=np.int64) - 1
    if np.any(idx < 0):
        raise DomainError("Thue-Morse positions start at 1")
    parity = np.zeros(idx.shape, dtype=np.int64)
    while np.any(idx):
        parity ^= idx & 1
        idx = idx >> 1
    return parity.astype(np.uint8)


def _require_exponent(n: int) -> None:
    if n < 1:
        raise DomainError(f"exponent must be at least 1, got {n}")
    if n > MAX_EXPONENT:
        raise CapacityError(f"exponent {n} is above the limit of {MAX_EXPONENT}")


@dataclass(frozen=True, eq=False)
class ThueMorsePrefix:
    """The first 2^n terms tau_1 ... tau_{2^n}"""

    n: int
    bits: np.ndarray

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_EXPONENT:
            raise DomainError(f"exponent must be within 0..{MAX_EXPONENT}, got {self.n}")
        bits = np.asarray(self.bits, dtype=np.uint8)
        if bits.shape != (1 << self.n,):
            raise DomainError(f"expected {1 << self.n} terms for exponent {self.n}, got shape {bits.shape}")
        if bits[0] != 0:
            raise DomainError("the sequence starts with tau_1 = 0")
        half = 1
        while half < bits.shape[0]:
            if not np.array_equal(bits[half : 2 * half], 1 - bits[:half]):
                raise DomainError(f"terms {half + 1}..{2 * half} are not the negation of terms 1..{half}")
            half *= 2

        bits.flags.writeable = False
        object.__setattr__(self, "bits", bits)

    @classmethod
    def build(cls, n: int) -> ThueMorsePrefix:
        """Grow the prefix by appending the bitwise negation of itself n times

        Args:
            n (int): Exponent, the prefix has 2^n terms

        Returns:
            ThueMorsePrefix: The prefix
        """
        if n < 0:
            raise DomainError(f"exponent must be nonnegative, got {n}")
        if n > MAX_EXPONENT:
            raise CapacityError(f"exponent {n} is above the limit of {MAX_EXPONENT}")
        bits = np.zeros(1, dtype=np.uint8)
        for _ in range(n):
            bits = np.concatenate([bits, 1 - bits])
        return cls(n, bits)

    def __len__(self) -> int:
        return self.bits.shape[0]

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= len(self):
            raise DomainError(f"position {i} out of range 1..{len(self)}")
        return int(self.bits[i - 1])


def prefix(n: int) -> ThueMorsePrefix:
    """The first 2^n Thue-Morse terms"""
    return ThueMorsePrefix.build(n)


def block_negation_check(n: int) -> bool:
    """Whether tau_{2^n + i} = 1 - tau_i for every i = 1 ... 2^n

    Args:
        n (int): Exponent, n >= 1

    Returns:
        bool: True when every block of length 2^n is followed by its negation
    """
    _require_exponent(n)
    block = 1 << n
    bits = tau_array(np.arange(1, 2 * block + 1))
    return bool(np.array_equal(bits[block:], 1 - bits[:block]))


@dataclass(frozen=True, eq=False)
class EvilOdious:
    """1-based positions in 1 ... 2^n where tau is 0 (evil) and 1 (odious)"""

    evil: np.ndarray
    odious: np.ndarray


def evil_odious_indices(n: int) -> EvilOdious:
    """Partition 1 ... 2^n by the value of tau

    Args:
        n (int): Exponent, n >= 1

    Returns:
        EvilOdious: The two index lists, 2^{n-1} positions each
    """
    _require_exponent(n)
    positions = np.arange(1, (1 << n) + 1)
    bits = tau_array(positions)
    return EvilOdious(positions[bits == 0], positions[bits == 1])


def l_diag_via_thue(n: int) -> np.ndarray:
    """(2 tau_1 - 1, ..., 2 tau_{2^n} - 1), entry i - 1 being the diagonal entry of L_{2^n} at basis index i - 1

    Args:
        n (int): Exponent, n >= 1

    Returns:
        np.ndarray: Real vector with entries in {-1, 1}
    """
    _require_exponent(n)
    bits = tau_array(np.arange(1, (1 << n) + 1))
    return 2.0 * bits - 1.0


class SupportClass(str, Enum):
    """Where a real unit vector keeps its mass relative to the evil/odious partition"""

    EVIL = "EvilSupport"
    ODIOUS = "OdiousSupport"
    MIXED = "Mixed"


@dataclass(frozen=True)
class SupportReport:
    classification: SupportClass
    value: float
    """|x^T L_{2^n} x|"""


def real_support_criterion(x: np.ndarray) -> SupportReport:
    """Classify a real unit vector by its support and evaluate |x^T L_{2^n} x|

    The value is one exactly when x vanishes on all odious positions or on
    all evil positions.

    Args:
        x (np.ndarray): Real vector of unit norm and length 2^n, n >= 1

    Returns:
        SupportReport: Classification and value
    """
    vec = np.asarray(x)
    if np.iscomplexobj(vec):
        if np.any(vec.imag != 0):
            raise DomainError("vector must be real")
        vec = vec.real
    vec = vec.astype(np.float64)

    size = vec.shape[0] if vec.ndim == 1 else 0
    if size < 2 or size & (size - 1):
        raise DomainError(f"vector length must be a power of two of at least 2, got {size}")
    if not np.all(np.isfinite(vec)):
        raise DomainError("vector entries must be finite")
    norm = float(np.linalg.norm(vec))
    if not abs(norm - 1.0) <= SUPPORT_TOL:
        raise DomainError(f"vector norm is {norm!r}, expected 1")

    n = size.bit_length() - 1
    diag = l_diag_via_thue(n)
    value = abs(float(np.sum(diag * vec * vec)))

    # diag is -1 on evil positions and +1 on odious ones
    on_evil = np.max(np.abs(vec[diag < 0]))
    on_odious = np.max(np.abs(vec[diag > 0]))
    if on_odious <= SUPPORT_TOL:
        cls = SupportClass.EVIL
    elif on_evil <= SUPPORT_TOL:
        cls = SupportClass.ODIOUS
    else:
        cls = SupportClass.MIXED
    return SupportReport(cls, value)
