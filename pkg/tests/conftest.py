import numpy as np
import pytest

from impressionist.raster import Raster

from reference import noise_raster


@pytest.fixture
def noise16():
    return noise_raster(16, 16, seed=16)


@pytest.fixture
def noise64():
    return noise_raster(64, 64, seed=64)


@pytest.fixture
def two_pixel():
    data = np.array([[[0, 0, 0], [255, 255, 255]]], dtype=np.uint8)
    return Raster(data)
