import io

import numpy as np
import pytest

from genbell.core.io import dump_state, parse_state, read_state, write_state
from genbell.core.sampling import random_state
from genbell.core.state import basis_state
from genbell.errors import StateFileError, StateValidationError, CapacityError


def test_write_read(tmp_path):
    s = random_state(4, np.random.default_rng(7))
    path = tmp_path / "state.txt"
    write_state(s, path)

    back = read_state(path)
    assert back.n == 4
    assert np.max(np.abs(back.amplitudes - s.amplitudes)) <= 1e-12


def test_dump_format():
    buf = io.StringIO()
    dump_state(basis_state(1, 1), buf)
    assert buf.getvalue() == "1\n0 0\n1 0\n"


def test_parse_renormalizes():
    s = parse_state(["1", "0.6 0", "0.8000001 0"])
    assert abs(np.linalg.norm(s.amplitudes) - 1) < 1e-12


def test_parse_trailing_blank_lines():
    s = parse_state(["1\n", "1 0\n", "0 0\n", "\n", "\n"])
    assert s.amplitudes[0] == 1


def test_parse_errors():
    with pytest.raises(StateFileError) as e:
        parse_state([])
    assert e.value.line == 1

    with pytest.raises(StateFileError) as e:
        parse_state(["two", "1 0", "0 0"])
    assert e.value.line == 1

    with pytest.raises(StateFileError) as e:
        parse_state(["1", "1 0", "0 x"])
    assert e.value.line == 3
    assert str(e.value).startswith("line 3: ")

    with pytest.raises(StateFileError) as e:
        parse_state(["1", "1 0 0", "0 0"])
    assert e.value.line == 2

    with pytest.raises(StateFileError) as e:
        parse_state(["2", "1 0", "0 0"])
    assert e.value.line == 4

    with pytest.raises(StateFileError) as e:
        parse_state(["1", "1 0", "0 0", "0 0"])
    assert e.value.line == 4

    with pytest.raises(CapacityError):
        parse_state(["27"])


def test_parse_validation():
    with pytest.raises(StateValidationError):
        parse_state(["1", "1 0", "0.1 0"])
    with pytest.raises(StateValidationError):
        parse_state(["1", "nan 0", "0 0"])
