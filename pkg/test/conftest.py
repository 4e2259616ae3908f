import numpy as np
import pytest

from pyduality.optics import CircuitMode
from pyduality.duality import output_state

#: Detector angles of the default sweep.
GRID = np.linspace(0, 45, 19)


@pytest.fixture
def grid():
    return GRID


@pytest.fixture
def out_dir(tmp_path):
    d = tmp_path / "out"
    d.mkdir()
    return d


@pytest.fixture(params=[CircuitMode.WAVE, CircuitMode.PARTICLE])
def mode(request):
    return request.param


@pytest.fixture
def wave_state_30():
    return output_state(30, CircuitMode.WAVE)
