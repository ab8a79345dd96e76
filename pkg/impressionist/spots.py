"""
Spot geometry and painting.

Every painter reads tones from the untouched source raster and writes into
the canvas; the canvas is never read. A painter returns the region it wrote
so the caller can track coverage.
"""
import math
from dataclasses import dataclass
from typing import List, Tuple, Union

import numpy as np

from .conf import Channel, Variant
from .raster import ChannelMask, Raster, clamp_coord
from .sampler import Point, SamplePoint

# Contrast against a zero reference tone; larger than any finite threshold.
SATURATED = math.inf


@dataclass(frozen=True)
class RectParams:
    lambda_: int
    lambda_small: int
    lambda_big: int
    tau: float

    def __post_init__(self):
        for name in ('lambda_', 'lambda_small', 'lambda_big'):
            if getattr(self, name) < 1:
                raise ValueError(f'{name.rstrip("_").replace("_", "-")} must be >= 1')
        if not self.lambda_small < self.lambda_:
            raise ValueError('requires lambda-small < lambda')
        if not self.lambda_ < self.lambda_big:
            raise ValueError('requires lambda < lambda-big')
        if not (math.isfinite(self.tau) and self.tau >= 0):
            raise ValueError(f'tau must be a finite value >= 0, got {self.tau}')


@dataclass(frozen=True)
class ThresholdParams:
    pi_size: int
    tau_prime: float

    def __post_init__(self):
        if self.pi_size < 1:
            raise ValueError(f'pi must be >= 1, got {self.pi_size}')
        if not (math.isfinite(self.tau_prime) and self.tau_prime >= 0):
            raise ValueError(f'tau-prime must be a finite value >= 0, got {self.tau_prime}')


class PaintedRegion:
    """
    Pixels written by one spot: a boolean mask over the window whose top-left
    corner is (x0, y0).
    """

    __slots__ = ('x0', 'y0', 'mask')

    def __init__(self, x0: int, y0: int, mask: np.ndarray):
        self.x0 = x0
        self.y0 = y0
        self.mask = mask

    @property
    def window(self) -> Tuple[slice, slice]:
        h, w = self.mask.shape
        return slice(self.y0, self.y0 + h), slice(self.x0, self.x0 + w)

    def pixels(self) -> List[Point]:
        ys, xs = np.nonzero(self.mask)
        return [(int(x) + self.x0, int(y) + self.y0) for y, x in zip(ys, xs)]

    def __len__(self):
        return int(np.count_nonzero(self.mask))

    def __contains__(self, xy):
        x, y = xy
        h, w = self.mask.shape
        i, j = y - self.y0, x - self.x0
        return 0 <= i < h and 0 <= j < w and bool(self.mask[i, j])

    def __repr__(self):
        return f'PaintedRegion(x0={self.x0}, y0={self.y0}, shape={self.mask.shape}, n={len(self)})'


def _channel(c: Union[Channel, int]) -> int:
    return c.value if isinstance(c, Channel) else int(c)


def _clip_window(cx: int, cy: int, left: int, right: int, top: int, bottom: int,
                 width: int, height: int) -> Tuple[int, int, int, int]:
    """Clip [cx-left, cx+right] x [cy-top, cy+bottom] to the image; bounds are half-open."""
    return (max(cx - left, 0), min(cx + right + 1, width),
            max(cy - top, 0), min(cy + bottom + 1, height))


def relative_diff(b_ref: int, b_other: int) -> float:
    """
    |b_other - b_ref| / b_ref, with a zero reference giving 0 for an equal
    tone and SATURATED otherwise.

    Examples::

        >>> relative_diff(100, 110), relative_diff(100, 100), relative_diff(0, 5)
        (0.1, 0.0, inf)
    """
    b_ref, b_other = int(b_ref), int(b_other)
    if b_ref == 0:
        return 0.0 if b_other == 0 else SATURATED
    return abs(b_other - b_ref) / b_ref


def relative_diff_array(b_ref: int, tones: np.ndarray) -> np.ndarray:
    """Elementwise relative_diff against one reference tone."""
    b_ref = int(b_ref)
    tones = tones.astype(np.float64)
    if b_ref == 0:
        return np.where(tones == 0, 0.0, SATURATED)
    return np.abs(tones - b_ref) / b_ref


def contrast_pair(src: Raster, p: Point, lambda_: int, c: Union[Channel, int]) -> Tuple[float, float]:
    """
    Horizontal and vertical contrast (A, B) at p, comparing against the pixels
    lambda_ to the right and below, clamped to the border.
    """
    x, y = p
    ch = _channel(c)
    b1 = src.get_tone(x, y, ch)
    b2 = src.get_tone(clamp_coord(x + lambda_, src.width), y, ch)
    b3 = src.get_tone(x, clamp_coord(y + lambda_, src.height), ch)
    return relative_diff(b1, b2), relative_diff(b1, b3)


def rect_dims(a: float, b: float, rp: RectParams) -> Tuple[int, int]:
    """
    Horizontal and vertical spot sides from the contrast pair.

    Examples::

        >>> rp = RectParams(lambda_=3, lambda_small=2, lambda_big=5, tau=0.1)
        >>> rect_dims(0.05, 0.05, rp), rect_dims(0.2, 0.05, rp)
        ((3, 3), (2, 5))
    """
    flat_a, flat_b = a <= rp.tau, b <= rp.tau
    if flat_a and flat_b:
        return rp.lambda_, rp.lambda_
    if not flat_a and not flat_b:
        return rp.lambda_small, rp.lambda_small
    if flat_a:
        return rp.lambda_big, rp.lambda_small
    return rp.lambda_small, rp.lambda_big


def paint_circle(canvas: Raster, src: Raster, sp: SamplePoint, rho: int,
                 mask: ChannelMask) -> PaintedRegion:
    """Disc of radius rho around the jittered point, in the tones of the grid point."""
    if rho < 0:
        raise ValueError(f'rho must be >= 0, got {rho}')
    cx, cy = sp.jittered
    gx, gy = sp.grid
    x0, x1, y0, y1 = _clip_window(cx, cy, rho, rho, rho, rho, canvas.width, canvas.height)
    ys, xs = np.ogrid[y0 - cy:y1 - cy, x0 - cx:x1 - cx]
    disc = xs * xs + ys * ys <= rho * rho
    window = canvas.data[y0:y1, x0:x1]
    for ch in mask.indices:
        window[..., ch][disc] = src.data[gy, gx, ch]
    return PaintedRegion(x0, y0, disc)


def paint_rect(canvas: Raster, src: Raster, sp: SamplePoint, rp: RectParams,
               variant: Variant, c: Union[Channel, int]) -> PaintedRegion:
    """
    Axis-aligned d' x d'' spot centred on the jittered point (floor offset for
    even sides). The source variant measures contrast and takes its tone at
    the grid point, the displaced variant at the jittered point.
    """
    ch = _channel(c)
    anchor = sp.grid if Variant.parse(variant) is Variant.SOURCE else sp.jittered
    a, b = contrast_pair(src, anchor, rp.lambda_, ch)
    d_x, d_y = rect_dims(a, b, rp)
    tone = src.data[anchor[1], anchor[0], ch]
    cx, cy = sp.jittered
    left, top = d_x // 2, d_y // 2
    x0, x1, y0, y1 = _clip_window(cx, cy, left, d_x - 1 - left, top, d_y - 1 - top,
                                  canvas.width, canvas.height)
    canvas.data[y0:y1, x0:x1, ch] = tone
    return PaintedRegion(x0, y0, np.ones((y1 - y0, x1 - x0), dtype=bool))


def paint_threshold(canvas: Raster, src: Raster, sp: SamplePoint, tp: ThresholdParams,
                    variant: Variant, c: Union[Channel, int]) -> PaintedRegion:
    """
    Inside the (2*pi + 1)-square around the jittered point, paint every pixel
    whose source tone is within relative distance tau_prime of the reference
    tone (grid point for the source variant, jittered point for displaced).
    """
    ch = _channel(c)
    anchor = sp.grid if Variant.parse(variant) is Variant.SOURCE else sp.jittered
    b_ref = int(src.data[anchor[1], anchor[0], ch])
    cx, cy = sp.jittered
    n = tp.pi_size
    x0, x1, y0, y1 = _clip_window(cx, cy, n, n, n, n, canvas.width, canvas.height)
    similar = relative_diff_array(b_ref, src.data[y0:y1, x0:x1, ch]) <= tp.tau_prime
    canvas.data[y0:y1, x0:x1, ch][similar] = b_ref
    return PaintedRegion(x0, y0, similar)
