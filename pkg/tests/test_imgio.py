import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from impressionist.imgio import (
    ImageFormatError,
    TruncatedImageError,
    UnsupportedDepthError,
    read_image,
    read_ppm,
    write_image,
    write_ppm,
)
from impressionist.raster import Raster, new_filled

from reference import noise_raster


def test_read_minimal():
    r = read_ppm(b'P6\n2 1\n255\n' + bytes([255, 0, 0, 0, 255, 0]))
    assert (r.width, r.height) == (2, 1)
    assert r.get_pixel(0, 0) == (255, 0, 0)
    assert r.get_pixel(1, 0) == (0, 255, 0)


def test_comments_are_ignored():
    pixels = bytes(range(12))
    plain = read_ppm(b'P6\n2 2\n255\n' + pixels)
    commented = read_ppm(b'P6\n# made by hand\n2 # width\n2\n# depth follows\n255\n' + pixels)
    assert plain == commented


def test_write_minimal():
    assert write_ppm(new_filled(1, 1, (0, 0, 0))) == b'P6\n1 1\n255\n\x00\x00\x00'


@pytest.mark.parametrize('payload, error', [
    (b'P3\n1 1\n255\n0 0 0', ImageFormatError),
    (b'XX', ImageFormatError),
    (b'', ImageFormatError),
    (b'P6\n1 1\n65535\n' + bytes(6), UnsupportedDepthError),
    (b'P6\n2 2\n255\n' + bytes(11), TruncatedImageError),
    (b'P6\n2 2\n255', TruncatedImageError),
    (b'P6\n2', TruncatedImageError),
    (b'P6\n0 2\n255\n', ImageFormatError),
    (b'P6\n-1 2\n255\n', ImageFormatError),
    (b'P6\nab 2\n255\n' + bytes(12), ImageFormatError),
])
def test_malformed_headers(payload, error):
    with pytest.raises(error):
        read_ppm(payload)


@given(st.binary(max_size=64))
def test_fuzzed_headers_never_crash(tail):
    try:
        r = read_ppm(b'P6' + tail)
    except ImageFormatError:
        return
    assert isinstance(r, Raster)


@pytest.mark.parametrize('raster', [
    new_filled(1, 1, (12, 34, 56)),
    noise_raster(7, 3, seed=1),
    noise_raster(512, 512, seed=512),
])
def test_round_trip(raster):
    encoded = write_ppm(raster)
    assert read_ppm(encoded) == raster
    assert write_ppm(read_ppm(encoded)) == encoded


@settings(max_examples=50)
@given(st.integers(1, 6), st.integers(1, 6), st.data())
def test_round_trip_random(width, height, data):
    payload = data.draw(st.binary(min_size=width * height * 3, max_size=width * height * 3))
    encoded = b'P6\n%d %d\n255\n' % (width, height) + payload
    assert write_ppm(read_ppm(encoded)) == encoded


def test_file_round_trip(tmp_path):
    raster = noise_raster(9, 4, seed=2)
    path = str(tmp_path / 'noise.ppm')
    write_image(raster, path)
    assert read_image(path) == raster
    with open(path, 'rb') as f:
        assert f.read() == write_ppm(raster)


@pytest.mark.parametrize('suffix', ['.png', '.bmp'])
def test_pillow_formats(tmp_path, suffix):
    raster = noise_raster(10, 6, seed=3)
    path = str(tmp_path / f'noise{suffix}')
    write_image(raster, path)
    assert read_image(path) == raster


def test_jpeg_output_refused(tmp_path):
    with pytest.raises(ValueError):
        write_image(new_filled(2, 2, (0, 0, 0)), str(tmp_path / 'out.jpg'))


def test_unknown_input_type(tmp_path):
    path = tmp_path / 'notes.txt'
    path.write_bytes(b'hello')
    with pytest.raises(ImageFormatError):
        read_image(str(path))


def test_raster_from_pil_converts_to_rgb():
    from PIL import Image
    image = Image.new('L', (3, 2), color=77)
    r = Raster.from_pil(image)
    assert np.all(r.data == 77)
