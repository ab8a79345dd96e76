import numpy as np
import pytest
from hypothesis import given, strategies as st

from impressionist.conf import Channel
from impressionist.raster import ChannelMask, Raster, clamp_coord, get_tone, mean_color, new_filled, set_tone


def test_new_filled():
    r = new_filled(2, 2, (255, 255, 255))
    assert (r.width, r.height) == (2, 2)
    assert all(r.get_pixel(x, y) == (255, 255, 255) for x in range(2) for y in range(2))
    assert new_filled(1, 1, (0, 0, 0)).get_pixel(0, 0) == (0, 0, 0)


@pytest.mark.parametrize('width, height', [(0, 5), (5, 0), (-1, 1)])
def test_new_filled_rejects_empty(width, height):
    with pytest.raises(ValueError):
        new_filled(width, height, (0, 0, 0))


def test_new_filled_rejects_bad_tone():
    with pytest.raises(ValueError):
        new_filled(1, 1, (0, 256, 0))


@pytest.mark.parametrize('data', [
    np.full((2, 2, 3), 10.5),
    np.full((2, 2, 3), np.nan),
    np.full((2, 2, 3), 256),
    np.full((2, 2, 3), -1),
])
def test_raster_rejects_invalid_tones(data):
    with pytest.raises(ValueError):
        Raster(data)


def test_raster_accepts_whole_float_tones():
    r = Raster(np.full((1, 2, 3), 200.0))
    assert r.data.dtype == np.uint8
    assert r.get_pixel(1, 0) == (200, 200, 200)


def test_data_layout():
    r = new_filled(4, 3, (1, 2, 3))
    assert r.data.shape == (3, 4, 3)
    assert len(r.tobytes()) == 4 * 3 * 3


def test_get_tone():
    r = new_filled(3, 2, (255, 255, 255))
    assert r.get_tone(2, 1, Channel.B) == 255
    r.data[0, 0] = (10, 20, 30)
    assert r.get_tone(0, 0, Channel.G) == 20


@pytest.mark.parametrize('x, y', [(3, 0), (0, 2), (-1, 0)])
def test_get_tone_out_of_range(x, y):
    r = new_filled(3, 2, (0, 0, 0))
    with pytest.raises(IndexError):
        r.get_tone(x, y, Channel.R)


def test_set_tone_only_touches_target():
    r = new_filled(3, 3, (50, 60, 70))
    for x in range(3):
        for y in range(3):
            for c in Channel:
                painted = r.copy()
                set_tone(painted, x, y, c, 7)
                diff = np.argwhere(painted.data != r.data)
                assert diff.tolist() == [[y, x, c.value]]
                assert get_tone(painted, x, y, c) == 7


def test_set_tone_out_of_range():
    r = new_filled(3, 2, (0, 0, 0))
    with pytest.raises(IndexError):
        r.set_tone(0, 2, Channel.R, 1)
    with pytest.raises(ValueError):
        r.set_tone(0, 0, Channel.R, 300)


@pytest.mark.parametrize('v, limit, expected', [(-3, 10, 0), (12, 10, 9), (5, 10, 5), (0, 1, 0)])
def test_clamp_coord(v, limit, expected):
    assert clamp_coord(v, limit) == expected


@given(st.integers(), st.integers(min_value=1, max_value=10_000))
def test_clamp_coord_in_range(v, limit):
    assert 0 <= clamp_coord(v, limit) <= limit - 1


def test_mean_color(two_pixel):
    assert mean_color(new_filled(5, 4, (100, 100, 100))) == (100, 100, 100)
    assert mean_color(two_pixel) == (127, 127, 127)
    data = np.zeros((1, 3, 3), dtype=np.uint8)
    data[0, :, 0] = [1, 2, 3]
    assert mean_color(Raster(data))[0] == 2


@given(st.tuples(*[st.integers(0, 255)] * 3), st.integers(1, 8), st.integers(1, 8))
def test_mean_color_of_constant(fill, width, height):
    assert mean_color(new_filled(width, height, fill)) == fill


def test_channel_mask():
    assert ChannelMask.parse('r').ordered == (Channel.R,)
    assert ChannelMask.parse('bgr').letters == 'rgb'
    assert ChannelMask().indices == (0, 1, 2)
    with pytest.raises(ValueError):
        ChannelMask.parse('')
    with pytest.raises(ValueError):
        ChannelMask.parse('rx')
    with pytest.raises(ValueError):
        ChannelMask(frozenset())
