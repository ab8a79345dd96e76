"""
In-memory RGB images and the colour-tone function b(x, y, c).
"""
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple, Union

import numpy as np

from .conf import Channel

RGB = Tuple[int, int, int]


def _channel_index(c: Union[Channel, int]) -> int:
    idx = c.value if isinstance(c, Channel) else int(c)
    if not 0 <= idx < 3:
        raise IndexError(f'channel {c} out of range')
    return idx


def _check_tone(v) -> int:
    v = int(v)
    if not 0 <= v <= 255:
        raise ValueError(f'tone {v} outside [0, 255]')
    return v


class Raster:
    """
    8-bit RGB image stored row-major as a (height, width, 3) uint8 array.

    Coordinates are 0-based, x runs along a row and y selects the row.

    Examples::

        >>> r = Raster.new_filled(2, 1, (10, 20, 30))
        >>> r.get_tone(1, 0, Channel.G)
        20
    """

    def __init__(self, data: np.ndarray):
        data = np.asarray(data)
        if data.ndim != 3 or data.shape[2] != 3:
            raise ValueError(f'expected an (height, width, 3) array, got shape {data.shape}')
        if data.shape[0] < 1 or data.shape[1] < 1:
            raise ValueError(f'raster dimensions must be >= 1, got {data.shape[1]}x{data.shape[0]}')
        if data.dtype != np.uint8:
            if data.dtype.kind not in 'uif':
                raise ValueError(f'tones must be numeric, got dtype {data.dtype}')
            if data.dtype.kind == 'f' and not np.all(np.isfinite(data) & (data == np.floor(data))):
                raise ValueError('tone values must be whole numbers')
            if data.min() < 0 or data.max() > 255:
                raise ValueError('tone values must lie in [0, 255]')
            data = data.astype(np.uint8)
        self.data = np.ascontiguousarray(data)

    @classmethod
    def new_filled(cls, width: int, height: int, fill: RGB = (255, 255, 255)) -> 'Raster':
        if width < 1 or height < 1:
            raise ValueError(f'raster dimensions must be >= 1, got {width}x{height}')
        fill = tuple(_check_tone(v) for v in fill)
        if len(fill) != 3:
            raise ValueError(f'fill must be an RGB triple, got {fill}')
        data = np.empty((height, width, 3), dtype=np.uint8)
        data[...] = fill
        return cls(data)

    @classmethod
    def from_bytes(cls, width: int, height: int, payload: bytes) -> 'Raster':
        expected = width * height * 3
        if len(payload) != expected:
            raise ValueError(f'expected {expected} bytes, got {len(payload)}')
        data = np.frombuffer(payload, dtype=np.uint8).reshape(height, width, 3)
        return cls(data.copy())

    @classmethod
    def from_pil(cls, image) -> 'Raster':
        return cls(np.array(image.convert('RGB'), dtype=np.uint8))

    def to_pil(self):
        from PIL import Image
        return Image.fromarray(self.data)

    @property
    def width(self) -> int:
        return self.data.shape[1]

    @property
    def height(self) -> int:
        return self.data.shape[0]

    def tobytes(self) -> bytes:
        return self.data.tobytes()

    def copy(self) -> 'Raster':
        return Raster(self.data.copy())

    def _check_xy(self, x: int, y: int):
        if not (0 <= x < self.width and 0 <= y < self.height):
            raise IndexError(f'pixel ({x}, {y}) outside {self.width}x{self.height} raster')

    def get_tone(self, x: int, y: int, c: Union[Channel, int]) -> int:
        self._check_xy(x, y)
        return int(self.data[y, x, _channel_index(c)])

    def set_tone(self, x: int, y: int, c: Union[Channel, int], v: int):
        self._check_xy(x, y)
        self.data[y, x, _channel_index(c)] = _check_tone(v)

    def get_pixel(self, x: int, y: int) -> RGB:
        self._check_xy(x, y)
        return tuple(int(v) for v in self.data[y, x])

    def mean_color(self) -> RGB:
        """Per-channel mean over all pixels, floored."""
        sums = self.data.reshape(-1, 3).sum(axis=0, dtype=np.uint64)
        n = self.width * self.height
        return tuple(int(s) // n for s in sums)

    def __eq__(self, other):
        if not isinstance(other, Raster):
            return NotImplemented
        return self.data.shape == other.data.shape and bool(np.array_equal(self.data, other.data))

    def __repr__(self):
        return f'Raster(width={self.width}, height={self.height})'


def new_filled(width: int, height: int, fill: RGB) -> Raster:
    return Raster.new_filled(width, height, fill)


def get_tone(r: Raster, x: int, y: int, c: Union[Channel, int]) -> int:
    return r.get_tone(x, y, c)


def set_tone(r: Raster, x: int, y: int, c: Union[Channel, int], v: int):
    r.set_tone(x, y, c, v)


def clamp_coord(v: int, limit: int) -> int:
    """
    Clamp a signed coordinate into [0, limit - 1].

    Examples::

        >>> clamp_coord(-3, 10), clamp_coord(12, 10), clamp_coord(5, 10)
        (0, 9, 5)
    """
    if limit < 1:
        raise ValueError(f'limit must be >= 1, got {limit}')
    return min(max(v, 0), limit - 1)


def mean_color(r: Raster) -> RGB:
    return r.mean_color()


@dataclass(frozen=True)
class ChannelMask:
    """Non-empty subset of the R, G, B channels."""
    selected: FrozenSet[Channel] = frozenset(Channel)

    def __post_init__(self):
        object.__setattr__(self, 'selected', frozenset(self.selected))
        if not self.selected:
            raise ValueError('at least one channel must be selected')
        for c in self.selected:
            if not isinstance(c, Channel):
                raise ValueError(f'{c!r} is not a Channel')

    @classmethod
    def parse(cls, spec: Union[str, Iterable[Channel]]) -> 'ChannelMask':
        """
        Build a mask from letters such as ``"rgb"`` or ``"r"``.

        Examples::

            >>> ChannelMask.parse('gr').letters
            'rg'
        """
        if not isinstance(spec, str):
            return cls(frozenset(spec))
        letters = spec.strip().lower()
        if not letters:
            raise ValueError('at least one channel must be selected')
        bad = set(letters) - set('rgb')
        if bad:
            raise ValueError(f'unknown channel letters: {"".join(sorted(bad))}')
        return cls(frozenset(Channel[ch.upper()] for ch in letters))

    @property
    def ordered(self) -> Tuple[Channel, ...]:
        """Selected channels in R, G, B order."""
        return tuple(c for c in Channel if c in self.selected)

    @property
    def indices(self) -> Tuple[int, ...]:
        return tuple(c.value for c in self.ordered)

    @property
    def letters(self) -> str:
        return ''.join(c.name.lower() for c in self.ordered)
