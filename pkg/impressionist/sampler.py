"""
Per-pass sampling: a regular grid with a random stride, each grid point
displaced by a random jitter.

Generator consumption per pass is fixed: the stride first, then for every
grid point in row-major order (y outer, x inner) the x jitter followed by the
y jitter.
"""
import logging
from dataclasses import dataclass
from typing import List, Tuple

from .raster import clamp_coord
from .rng import RngStream

logger = logging.getLogger(__name__)

Point = Tuple[int, int]


@dataclass(frozen=True)
class GridParams:
    s_min: int
    s_max: int
    delta: int = 0

    def __post_init__(self):
        if self.s_min < 1:
            raise ValueError(f's_min must be >= 1, got {self.s_min}')
        if self.s_max < self.s_min:
            raise ValueError(f'requires s_min <= s_max, got s_min={self.s_min} s_max={self.s_max}')
        if self.delta < 0:
            raise ValueError(f'delta must be >= 0, got {self.delta}')


@dataclass(frozen=True)
class SamplePoint:
    grid: Point
    jittered: Point


def draw_stride(g: RngStream, p: GridParams) -> int:
    return g.next_int_inclusive(p.s_min, p.s_max)


def grid_points(width: int, height: int, s: int) -> List[Point]:
    """
    Lattice points (i*s, j*s) inside the image, row-major.

    Examples::

        >>> grid_points(10, 10, 5)
        [(0, 0), (5, 0), (0, 5), (5, 5)]
    """
    if s < 1:
        raise ValueError(f'stride must be >= 1, got {s}')
    return [(x, y) for y in range(0, height, s) for x in range(0, width, s)]


def jitter_point(g: RngStream, p: Point, delta: int, width: int, height: int) -> Point:
    dx = g.next_int_inclusive(-delta, delta)
    dy = g.next_int_inclusive(-delta, delta)
    return clamp_coord(p[0] + dx, width), clamp_coord(p[1] + dy, height)


def sample_pass(g: RngStream, width: int, height: int, p: GridParams) -> Tuple[int, List[SamplePoint]]:
    s = draw_stride(g, p)
    points = [SamplePoint(grid=pt, jittered=jitter_point(g, pt, p.delta, width, height))
              for pt in grid_points(width, height, s)]
    logger.debug('sampled %d points with stride %d', len(points), s)
    return s, points
