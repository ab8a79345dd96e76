"""
Image decoding and encoding.

Binary PPM (P6, maxval 255) is handled here byte for byte and is the format
used for reproducible output. PNG, BMP and JPEG sources go through Pillow.
"""
import io
import logging
import os
from typing import Tuple

from .raster import Raster

logger = logging.getLogger(__name__)

PPM_MAGIC = b'P6'
_WHITESPACE = b' \t\n\r\x0b\x0c'
PIL_READ_SUFFIXES = ('.png', '.bmp', '.jpg', '.jpeg')
PIL_WRITE_SUFFIXES = ('.png', '.bmp')


class ImageFormatError(ValueError):
    """The payload is not a well-formed image of the expected format."""


class UnsupportedDepthError(ImageFormatError):
    """PPM maxval other than 255."""


class TruncatedImageError(ImageFormatError):
    """Pixel data shorter than the header announces."""


def _read_header_token(data: bytes, pos: int) -> Tuple[bytes, int]:
    """Skip whitespace and comments, then return the next token and the position after it."""
    n = len(data)
    while pos < n:
        ch = data[pos:pos + 1]
        if ch in _WHITESPACE:
            pos += 1
        elif ch == b'#':
            while pos < n and data[pos:pos + 1] not in (b'\n', b'\r'):
                pos += 1
        else:
            break
    start = pos
    while pos < n and data[pos:pos + 1] not in _WHITESPACE and data[pos:pos + 1] != b'#':
        pos += 1
    if start == pos:
        raise TruncatedImageError('unexpected end of PPM header')
    return data[start:pos], pos


def _header_int(token: bytes, name: str) -> int:
    if not token.isdigit():
        raise ImageFormatError(f'PPM {name} is not a decimal number: {token!r}')
    return int(token)


def read_ppm(data: bytes) -> Raster:
    """
    Decode a binary P6 PPM.

    Examples::

        >>> r = read_ppm(b'P6\\n2 1\\n255\\n' + bytes([255, 0, 0, 0, 255, 0]))
        >>> r.get_pixel(0, 0)
        (255, 0, 0)
    """
    data = bytes(data)
    if data[:2] != PPM_MAGIC:
        raise ImageFormatError(f'not a binary PPM: magic {data[:2]!r}')
    pos = 2
    if pos >= len(data) or data[pos:pos + 1] not in _WHITESPACE and data[pos:pos + 1] != b'#':
        raise ImageFormatError('PPM magic must be followed by whitespace')
    token, pos = _read_header_token(data, pos)
    width = _header_int(token, 'width')
    token, pos = _read_header_token(data, pos)
    height = _header_int(token, 'height')
    token, pos = _read_header_token(data, pos)
    maxval = _header_int(token, 'maxval')
    if width < 1 or height < 1:
        raise ImageFormatError(f'PPM dimensions must be >= 1, got {width}x{height}')
    if maxval != 255:
        raise UnsupportedDepthError(f'only maxval 255 is supported, got {maxval}')
    if pos >= len(data):
        raise TruncatedImageError('PPM header is not followed by pixel data')
    if data[pos:pos + 1] not in _WHITESPACE:
        raise ImageFormatError('PPM maxval must be followed by a single whitespace byte')
    pos += 1
    expected = width * height * 3
    payload = data[pos:pos + expected]
    if len(payload) < expected:
        raise TruncatedImageError(f'expected {expected} bytes of pixel data, got {len(payload)}')
    if len(data) > pos + expected:
        logger.warning('ignoring %d trailing bytes after PPM pixel data', len(data) - pos - expected)
    return Raster.from_bytes(width, height, payload)


def write_ppm(r: Raster) -> bytes:
    """Canonical P6 encoding: ``P6\\n<w> <h>\\n255\\n`` followed by raw RGB."""
    return b'P6\n%d %d\n255\n' % (r.width, r.height) + r.tobytes()


def read_image(path: str) -> Raster:
    suffix = os.path.splitext(path)[1].lower()
    with open(path, 'rb') as f:
        data = f.read()
    if suffix == '.ppm' or data[:2] == PPM_MAGIC:
        return read_ppm(data)
    if suffix in PIL_READ_SUFFIXES:
        from PIL import Image, UnidentifiedImageError
        try:
            with Image.open(io.BytesIO(data)) as image:
                return Raster.from_pil(image)
        except UnidentifiedImageError as e:
            raise ImageFormatError(f'{path}: {e}') from e
    raise ImageFormatError(f'unsupported image type: {path}')


def write_image(r: Raster, path: str):
    suffix = os.path.splitext(path)[1].lower()
    if suffix in ('.jpg', '.jpeg'):
        raise ValueError('JPEG output is lossy and not supported; use .ppm, .png or .bmp')
    if suffix in PIL_WRITE_SUFFIXES:
        r.to_pil().save(path)
        return
    with open(path, 'wb') as f:
        f.write(write_ppm(r))
