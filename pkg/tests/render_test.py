import os

import numpy as np
import pytest

from genbell.errors import DomainError, CapacityError
from genbell.gates import GateKind, GateTag
from genbell.render import RenderSpec, classify, render_ppm, write_ppm

DATA_DIR = os.path.join(os.path.dirname(os.path.realpath(__file__)), "data")


def _pixels(data: bytes, size: int) -> np.ndarray:
    header = f"P6\n{size} {size}\n255\n".encode("ascii")
    assert data.startswith(header)
    return np.frombuffer(data[len(header) :], dtype=np.uint8).reshape(size, size, 3)


def test_render_m2_golden():
    with open(os.path.join(DATA_DIR, "m2_cell4.ppm"), "rb") as f:
        golden = f.read()
    assert render_ppm(RenderSpec(GateTag(GateKind.M, 2))) == golden


def test_render_bell2():
    spec = RenderSpec(GateTag(GateKind.BELL, 2), cellsize=1)
    pixels = _pixels(render_ppm(spec), 4)
    black = np.all(pixels == 0, axis=2)
    white = np.all(pixels == 255, axis=2)
    assert np.count_nonzero(black) == 6
    assert np.count_nonzero(white) == 2
    assert white[2, 3] and white[3, 2]


def test_render_families():
    for n in range(2, 8):
        for kind in (GateKind.M, GateKind.BELL):
            spec = RenderSpec(GateTag(kind, n), cellsize=2)
            data = render_ppm(spec)
            assert len(_pixels(data, spec.size)) == (1 << n) * 2


def test_render_deterministic(tmp_path):
    spec = RenderSpec(GateTag(GateKind.BELL, 4))
    a, b = tmp_path / "a.ppm", tmp_path / "b.ppm"
    write_ppm(spec, a)
    write_ppm(spec, b)
    assert a.read_bytes() == b.read_bytes()


def test_render_scales():
    assert RenderSpec(GateTag(GateKind.HADAMARD), cellsize=1).size == 2
    _pixels(render_ppm(RenderSpec(GateTag(GateKind.HADAMARD), cellsize=1)), 2)
    _pixels(render_ppm(RenderSpec(GateTag(GateKind.WALSH, 3), cellsize=1)), 8)


def test_render_errors():
    with pytest.raises(CapacityError):
        RenderSpec(GateTag(GateKind.M, 15))
    with pytest.raises(DomainError):
        RenderSpec(GateTag(GateKind.M, 2), cellsize=0)
    with pytest.raises(DomainError):
        classify(np.array([[0.5, 0], [0, 1]]))
    # PauliY has imaginary entries
    with pytest.raises(DomainError):
        render_ppm(RenderSpec(GateTag(GateKind.PAULI_Y)))
