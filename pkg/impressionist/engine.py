"""
Background initialization, pass iteration and coverage accounting.
"""
import logging
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional

import numpy as np
from tqdm.auto import tqdm

from .conf import Background, Mode, StopReason
from .raster import ChannelMask, Raster
from .rng import RngStream, check_seed
from .sampler import GridParams, sample_pass
from .spots import (
    PaintedRegion,
    RectParams,
    ThresholdParams,
    paint_circle,
    paint_rect,
    paint_threshold,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StopRule:
    """
    Either a fixed number of passes, or a coverage target bounded by
    max_passes.
    """
    passes: Optional[int] = None
    coverage: Optional[float] = None
    max_passes: Optional[int] = None

    def __post_init__(self):
        if self.passes is not None:
            if self.coverage is not None or self.max_passes is not None:
                raise ValueError('passes cannot be combined with coverage/max-passes')
            if self.passes < 1:
                raise ValueError(f'passes must be >= 1, got {self.passes}')
            return
        if self.coverage is None or self.max_passes is None:
            raise ValueError('requires either passes, or coverage together with max-passes')
        if not 0.0 <= self.coverage <= 1.0:
            raise ValueError(f'coverage must lie in [0, 1], got {self.coverage}')
        if self.max_passes < 1:
            raise ValueError(f'max-passes must be >= 1, got {self.max_passes}')

    @classmethod
    def fixed(cls, passes: int) -> 'StopRule':
        return cls(passes=passes)

    @classmethod
    def until_coverage(cls, coverage: float, max_passes: int) -> 'StopRule':
        return cls(coverage=coverage, max_passes=max_passes)

    @property
    def limit(self) -> int:
        return self.passes if self.passes is not None else self.max_passes


@dataclass(frozen=True)
class RenderConfig:
    mode: Mode
    grid: GridParams
    stop: StopRule
    seed: int = 0
    background: Background = Background.WHITE
    rho: Optional[int] = None
    rect: Optional[RectParams] = None
    threshold: Optional[ThresholdParams] = None
    mask: ChannelMask = field(default_factory=ChannelMask)

    def __post_init__(self):
        object.__setattr__(self, 'mode', Mode.parse(self.mode))
        object.__setattr__(self, 'background', Background.parse(self.background))
        object.__setattr__(self, 'seed', check_seed(self.seed))
        if self.mode is Mode.CIRCLE:
            if self.rho is None:
                raise ValueError('circle mode requires rho')
            if self.rho < 0:
                raise ValueError(f'rho must be >= 0, got {self.rho}')
        elif self.mode.is_rect and self.rect is None:
            raise ValueError(f'{self.mode.value} mode requires rect parameters')
        elif self.mode.is_threshold and self.threshold is None:
            raise ValueError(f'{self.mode.value} mode requires threshold parameters')


class CoverMap:
    """Per-pixel record of what any spot has written. Bits only go up."""

    def __init__(self, width: int, height: int):
        if width < 1 or height < 1:
            raise ValueError(f'cover map dimensions must be >= 1, got {width}x{height}')
        self.painted = np.zeros((height, width), dtype=bool)

    @property
    def width(self) -> int:
        return self.painted.shape[1]

    @property
    def height(self) -> int:
        return self.painted.shape[0]

    def mark(self, region: PaintedRegion):
        self.painted[region.window] |= region.mask

    def count(self) -> int:
        return int(np.count_nonzero(self.painted))

    def fraction(self) -> float:
        return self.count() / (self.width * self.height)


def coverage_fraction(cover: CoverMap) -> float:
    return cover.fraction()


@dataclass(frozen=True)
class PassReport:
    pass_index: int
    stride_used: int
    spots_painted: int
    pixels_written: int
    coverage: float


@dataclass
class RenderResult:
    canvas: Raster
    reports: List[PassReport]
    cover: CoverMap
    stop_reason: StopReason

    def __iter__(self):
        # unpacks as (canvas, reports)
        yield self.canvas
        yield self.reports


def init_background(src: Raster, mode: Background) -> Raster:
    mode = Background.parse(mode)
    if mode is Background.WHITE:
        return Raster.new_filled(src.width, src.height, (255, 255, 255))
    if mode is Background.MEAN_HUE:
        return Raster.new_filled(src.width, src.height, src.mean_color())
    return src.copy()


def _spot_pixels(regions: List[PaintedRegion]) -> int:
    """Pixels written by one spot in any channel."""
    if len(regions) == 1:
        return len(regions[0])
    x0 = min(r.x0 for r in regions)
    y0 = min(r.y0 for r in regions)
    x1 = max(r.x0 + r.mask.shape[1] for r in regions)
    y1 = max(r.y0 + r.mask.shape[0] for r in regions)
    union = np.zeros((y1 - y0, x1 - x0), dtype=bool)
    for r in regions:
        h, w = r.mask.shape
        union[r.y0 - y0:r.y0 - y0 + h, r.x0 - x0:r.x0 - x0 + w] |= r.mask
    return int(np.count_nonzero(union))


def run_pass(src: Raster, canvas: Raster, cover: CoverMap, g: RngStream,
             cfg: RenderConfig, pass_index: int = 1) -> PassReport:
    if (src.width, src.height) != (canvas.width, canvas.height):
        raise ValueError(f'source {src.width}x{src.height} and canvas '
                         f'{canvas.width}x{canvas.height} differ in size')
    stride, points = sample_pass(g, src.width, src.height, cfg.grid)
    spots = 0
    written = 0
    channels = cfg.mask.ordered
    for sp in points:
        if cfg.mode is Mode.CIRCLE:
            regions = [paint_circle(canvas, src, sp, cfg.rho, cfg.mask)]
        elif cfg.mode.is_rect:
            regions = [paint_rect(canvas, src, sp, cfg.rect, cfg.mode.variant, c) for c in channels]
        else:
            regions = [paint_threshold(canvas, src, sp, cfg.threshold, cfg.mode.variant, c)
                       for c in channels]
        spots += 1
        written += _spot_pixels(regions)
        for region in regions:
            cover.mark(region)
    report = PassReport(pass_index=pass_index, stride_used=stride, spots_painted=spots,
                        pixels_written=written, coverage=cover.fraction())
    logger.debug('pass %d: stride=%d spots=%d pixels=%d coverage=%.4f', pass_index,
                 stride, spots, written, report.coverage)
    return report


def render(src: Raster, cfg: RenderConfig, progress: bool = False) -> RenderResult:
    """
    Paint passes over a fresh background until the stop rule fires.

    Returns a RenderResult, which also unpacks as ``canvas, reports``.
    """
    logger.info('rendering %dx%d image: mode=%s background=%s seed=%d', src.width, src.height,
                cfg.mode.value, cfg.background.value, cfg.seed)
    canvas = init_background(src, cfg.background)
    cover = CoverMap(src.width, src.height)
    g = RngStream.from_seed(cfg.seed)
    reports = []
    stop = cfg.stop
    reason = StopReason.PASSES if stop.passes is not None else StopReason.MAX_PASSES
    for index in tqdm(range(stop.limit), disable=not progress, desc='passes'):
        reports.append(run_pass(src, canvas, cover, g, cfg, pass_index=index + 1))
        if stop.coverage is not None and reports[-1].coverage >= stop.coverage:
            reason = StopReason.COVERAGE
            break
    logger.info('stopped after %d passes (%s), coverage %.4f', len(reports), reason.value,
                cover.fraction())
    return RenderResult(canvas=canvas, reports=reports, cover=cover, stop_reason=reason)


def reports_to_records(reports: List[PassReport]) -> List[Dict]:
    return [asdict(r) for r in reports]
