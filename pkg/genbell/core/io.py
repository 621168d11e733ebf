"""Text state files

Line 1 holds the qubit count n, lines 2 ... 2^n + 1 hold one amplitude each
as "re im", in basis index order.
"""

from typing import IO, List, Union
from pathlib import Path
import logging

import numpy as np

from genbell.core.state import PureState, IMPLICIT_MAX_QUBITS
from genbell.errors import StateFileError, StateValidationError, CapacityError

READ_NORM_TOL = 1e-6
"""Largest norm deviation a state file may have before it is rejected"""


def format_float(x: float) -> str:
    """17 significant digits, enough to round-trip a double"""
    return f"{x:.17g}"


def dump_state(s: PureState, f: IO[str]) -> None:
    """Write a state to an open text stream

    Args:
        s (PureState): State to write
        f (IO[str]): Stream to write to
    """
    f.write(f"{s.n}\n")
    for amp in s.amplitudes:
        f.write(f"{format_float(amp.real)} {format_float(amp.imag)}\n")


def write_state(s: PureState, path: Union[str, Path]) -> None:
    """Write a state file

    Args:
        s (PureState): State to write
        path (Union[str, Path]): Destination path
    """
    with open(path, "w") as f:
        dump_state(s, f)
    logging.info(f"wrote {s.n}-qubit state to '{path}'")


def parse_state(lines: List[str]) -> PureState:
    """Parse the lines of a state file

    Args:
        lines (List[str]): Lines of the file

    Returns:
        PureState: The state, renormalized if its norm was off by less than 1e-6
    """
    body = [line.strip() for line in lines]
    while body and body[-1] == "":
        body.pop()

    if not body:
        raise StateFileError("file is empty", line=1)

    try:
        n = int(body[0])
    except ValueError:
        raise StateFileError(f"expected the qubit count, got '{body[0]}'", line=1)
    if n < 1:
        raise StateFileError(f"qubit count must be at least 1, got {n}", line=1)
    if n > IMPLICIT_MAX_QUBITS:
        raise CapacityError(f"{n} qubits is above the limit of {IMPLICIT_MAX_QUBITS}")

    dim = 1 << n
    if len(body) - 1 < dim:
        raise StateFileError(f"expected {dim} amplitude lines, found {len(body) - 1}", line=len(body) + 1)
    if len(body) - 1 > dim:
        raise StateFileError(f"expected {dim} amplitude lines, found {len(body) - 1}", line=dim + 2)

    amps = np.empty(dim, dtype=np.complex128)
    for idx, line in enumerate(body[1:]):
        parts = line.split()
        if len(parts) != 2:
            raise StateFileError(f"expected 're im', got '{line}'", line=idx + 2)
        try:
            amps[idx] = complex(float(parts[0]), float(parts[1]))
        except ValueError:
            raise StateFileError(f"could not parse amplitude '{line}'", line=idx + 2)

    if not np.all(np.isfinite(amps)):
        raise StateValidationError("amplitudes must be finite")

    norm = float(np.linalg.norm(amps))
    if abs(norm - 1.0) > READ_NORM_TOL:
        raise StateValidationError(f"state norm is {norm!r}, deviates from 1 by more than {READ_NORM_TOL}")
    if norm != 1.0:
        logging.debug(f"renormalizing state with norm {norm!r}")
        amps /= norm

    return PureState(n, amps)


def read_state(path: Union[str, Path]) -> PureState:
    """Read a state file

    Args:
        path (Union[str, Path]): Path to read

    Returns:
        PureState: The state
    """
    with open(path, "r") as f:
        return parse_state(f.readlines())
