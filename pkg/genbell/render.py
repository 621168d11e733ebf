"""Render operator matrices as binary portable pixmaps

Entries 0 are grey, +1 black and -1 white, after dividing out the global
normalization of the Bell, Walsh and Hadamard matrices.
"""

from dataclasses import dataclass, field
from typing import Dict, Tuple, Union
from pathlib import Path
import logging

import numpy as np

from genbell.core.operator import DENSE_MAX_QUBITS
from genbell.gates import GateKind, GateTag, dense
from genbell.errors import DomainError, CapacityError

CLASSIFY_TOL = 1e-9

Color = Tuple[int, int, int]

DEFAULT_PALETTE: Dict[int, Color] = {
    0: (128, 128, 128),
    1: (0, 0, 0),
    -1: (255, 255, 255),
}


@dataclass(frozen=True)
class RenderSpec:
    """What to render and how large"""

    target: GateTag
    cellsize: int = 4
    palette: Dict[int, Color] = field(default_factory=lambda: dict(DEFAULT_PALETTE))

    def __post_init__(self) -> None:
        if self.cellsize < 1:
            raise DomainError(f"cellsize must be positive, got {self.cellsize}")
        if self.target.qubits > DENSE_MAX_QUBITS:
            raise CapacityError(f"{self.target} is above the dense limit of {DENSE_MAX_QUBITS} qubits")

    @property
    def scale(self) -> float:
        """Factor the matrix is multiplied by so its entries land in {0, +1, -1}"""
        kind = self.target.kind
        if kind == GateKind.BELL:
            return 2.0 ** ((self.target.qubits - 1) / 2)
        if kind == GateKind.WALSH:
            return 2.0 ** (self.target.qubits / 2)
        if kind == GateKind.HADAMARD:
            return 2.0**0.5
        return 1.0

    @property
    def size(self) -> int:
        return (1 << self.target.qubits) * self.cellsize


def classify(matrix: np.ndarray, scale: float = 1.0) -> np.ndarray:
    """Map every entry of scale * matrix to -1, 0 or +1

    Args:
        matrix (np.ndarray): The matrix
        scale (float, optional): Normalization to divide out. Defaults to 1.0.

    Returns:
        np.ndarray: Integer matrix of signs
    """
    scaled = np.asarray(matrix) * scale
    signs = np.rint(scaled.real).astype(np.int8)
    off = np.abs(scaled - signs)
    if np.any(off > CLASSIFY_TOL) or np.any(np.abs(signs) > 1):
        row, col = np.unravel_index(np.argmax(off), off.shape)
        raise DomainError(f"entry ({row}, {col}) = {matrix[row, col]!r} is not one of 0, +1, -1 after scaling")
    return signs


def render_ppm(spec: RenderSpec) -> bytes:
    """Render the target matrix as a binary P6 pixmap

    Args:
        spec (RenderSpec): What to render

    Returns:
        bytes: The pixmap, rows top to bottom
    """
    signs = classify(dense(spec.target).matrix, spec.scale)

    lut = np.zeros((3, 3), dtype=np.uint8)
    for sign, color in spec.palette.items():
        lut[sign + 1] = color
    pixels = lut[signs + 1]
    pixels = np.repeat(np.repeat(pixels, spec.cellsize, axis=0), spec.cellsize, axis=1)

    header = f"P6\n{spec.size} {spec.size}\n255\n".encode("ascii")
    return header + pixels.tobytes()


def write_ppm(spec: RenderSpec, path: Union[str, Path]) -> None:
    """Render the target matrix to a file

    Args:
        spec (RenderSpec): What to render
        path (Union[str, Path]): Destination path
    """
    data = render_ppm(spec)
    with open(path, "wb") as f:
        f.write(data)
    logging.info(f"wrote {spec.size}x{spec.size} rendering of {spec.target} to '{path}'")
