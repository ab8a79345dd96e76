"""
Command-line front end.

Settings are resolved from, lowest precedence first: built-in defaults, a
named preset, a config file, explicit flags. The resolved settings, including
the seed actually used, are written as the first record of the JSON Lines
report so a run can be repeated from its report alone::

    python -m impressionist --input in.ppm --output out.ppm --mode circle \\
        --rho 3 --s-min 2 --s-max 6 --delta 2 --passes 10 --seed 7 \\
        --report run.jsonl
"""
import argparse
import json
import logging
import os
import sys
import typing
from dataclasses import dataclass, field, fields
from typing import Any, Dict, List, Optional, Tuple, Union

import jsonlines
from pydantic import BaseModel, StrictFloat, StrictInt, StrictStr, ValidationError

from . import __version__
from .conf import PRESETS, Background, Mode
from .engine import RenderConfig, StopRule, render, reports_to_records
from .imgio import PIL_READ_SUFFIXES, PIL_WRITE_SUFFIXES, ImageFormatError, read_image, write_image
from .raster import ChannelMask
from .rng import fresh_seed
from .sampler import GridParams
from .spots import RectParams, ThresholdParams
from .utils import flag_name, missing, normalize_key, sha256_file, timeit

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2

# Keys of a report's config record that describe the run rather than configure it.
_REPORT_ONLY_KEYS = ('type', 'version', 'seed_generated')
_COVERAGE_RULE = ('coverage', 'max_passes')


class UsageError(ValueError):
    """Bad command line or config file."""


@dataclass
class RenderArguments:
    """
    Arguments of one rendering run. Every field becomes a flag; ``lambda_``
    is spelled ``--lambda``.
    """
    input: Optional[str] = field(default=None, metadata={'help': 'Source image (.ppm; .png/.bmp/.jpg via Pillow).'})
    output: Optional[str] = field(default=None, metadata={'help': 'Rendered image (.ppm; .png/.bmp via Pillow).'})
    mode: Optional[str] = field(
        default=None, metadata={'help': 'Spot type.', 'choices': Mode.choices()}
    )
    background: Optional[str] = field(
        default=None, metadata={'help': 'Canvas initialization.', 'choices': Background.choices()}
    )
    seed: Optional[int] = field(default=None, metadata={'help': 'Random seed; drawn and reported when omitted.'})
    s_min: Optional[int] = field(default=None, metadata={'help': 'Smallest grid stride in pixels.'})
    s_max: Optional[int] = field(default=None, metadata={'help': 'Largest grid stride in pixels.'})
    delta: Optional[int] = field(default=None, metadata={'help': 'Jitter half-width in pixels.'})
    rho: Optional[int] = field(default=None, metadata={'help': 'Circle radius (circle mode).'})
    lambda_: Optional[int] = field(default=None, metadata={'help': 'Base rectangle side and contrast offset (rect modes).'})
    lambda_small: Optional[int] = field(default=None, metadata={'help': 'Short rectangle side, < lambda (rect modes).'})
    lambda_big: Optional[int] = field(default=None, metadata={'help': 'Long rectangle side, > lambda (rect modes).'})
    tau: Optional[float] = field(default=None, metadata={'help': 'Contrast threshold (rect modes).'})
    pi: Optional[int] = field(default=None, metadata={'help': 'Neighbourhood half-width (threshold modes).'})
    tau_prime: Optional[float] = field(default=None, metadata={'help': 'Tone similarity threshold (threshold modes).'})
    passes: Optional[int] = field(default=None, metadata={'help': 'Fixed number of passes.'})
    coverage: Optional[float] = field(default=None, metadata={'help': 'Stop once this fraction of the canvas is painted.'})
    max_passes: Optional[int] = field(default=None, metadata={'help': 'Pass limit when stopping on coverage.'})
    channels: Optional[str] = field(default=None, metadata={'help': 'Channels to paint, subset of "rgb".'})
    report: Optional[str] = field(default=None, metadata={'help': 'Write a JSON Lines run report here.'})
    config: Optional[str] = field(default=None, metadata={'help': 'JSON config file, or a previous JSON Lines report.'})
    preset: Optional[str] = field(
        default=None, metadata={'help': 'Named parameter set used as defaults.', 'choices': sorted(PRESETS)}
    )
    progress: bool = field(default=False, metadata={'help': 'Show a progress bar over passes.'})
    verbose: bool = field(default=False, metadata={'help': 'Log every pass.'})
    quiet: bool = field(default=False, metadata={'help': 'Only log warnings and errors.'})


DEFAULTS = {'background': Background.WHITE.value, 'channels': 'rgb', 'delta': 0}
SETTING_NAMES = tuple(f.name for f in fields(RenderArguments)
                      if f.name not in ('config', 'preset', 'progress', 'verbose', 'quiet'))
MODE_REQUIRED = {
    Mode.CIRCLE: ('rho',),
    Mode.RECT_SOURCE: ('lambda_', 'lambda_small', 'lambda_big', 'tau'),
    Mode.RECT_DISPLACED: ('lambda_', 'lambda_small', 'lambda_big', 'tau'),
    Mode.THRESH_SOURCE: ('pi', 'tau_prime'),
    Mode.THRESH_DISPLACED: ('pi', 'tau_prime'),
}
_FIELD_TYPES = {f.name: f.type for f in fields(RenderArguments)}


@dataclass
class CliInvocation:
    input: str
    output: str
    config: RenderConfig
    settings: Dict[str, Any]
    report: Optional[str] = None
    config_path: Optional[str] = None
    seed_generated: bool = False
    progress: bool = False
    log_level: int = logging.INFO


class _ArgumentParser(argparse.ArgumentParser):

    def error(self, message):
        raise UsageError(message)


def _scalar_type(name):
    tp = _FIELD_TYPES[name]
    args = [a for a in typing.get_args(tp) if a is not type(None)]
    return args[0] if args else tp


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog='impressionist',
        description='Render an image as colour spots laid over randomly jittered grids.',
        argument_default=argparse.SUPPRESS,
    )
    for f in fields(RenderArguments):
        kwargs = {'help': f.metadata.get('help'), 'dest': f.name}
        if _scalar_type(f.name) is bool:
            kwargs['action'] = 'store_true'
        else:
            kwargs['type'] = _scalar_type(f.name)
            if 'choices' in f.metadata:
                kwargs['choices'] = f.metadata['choices']
        parser.add_argument(flag_name(f.name), **kwargs)
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    return parser


Number = Union[StrictFloat, StrictInt]


class RenderSettings(BaseModel):
    """
    One layer of settings: a preset, a config file, the config record of a
    report, or the explicit flags. Keys use field names (``lambda_`` for
    ``--lambda``); a layer only carries the keys it sets.
    """
    input: Optional[StrictStr] = None
    output: Optional[StrictStr] = None
    mode: Optional[StrictStr] = None
    background: Optional[StrictStr] = None
    seed: Optional[StrictInt] = None
    s_min: Optional[StrictInt] = None
    s_max: Optional[StrictInt] = None
    delta: Optional[StrictInt] = None
    rho: Optional[StrictInt] = None
    lambda_: Optional[StrictInt] = None
    lambda_small: Optional[StrictInt] = None
    lambda_big: Optional[StrictInt] = None
    tau: Optional[Number] = None
    pi: Optional[StrictInt] = None
    tau_prime: Optional[Number] = None
    passes: Optional[StrictInt] = None
    coverage: Optional[Number] = None
    max_passes: Optional[StrictInt] = None
    channels: Optional[StrictStr] = None
    report: Optional[StrictStr] = None

    class Config:
        extra = 'forbid'

    @classmethod
    def layer(cls, raw: Dict[str, Any], origin: str) -> Dict[str, Any]:
        """Validate raw keys in flag or field spelling; returns the non-null keys that were set."""
        try:
            record = cls.parse_obj({normalize_key(k): v for k, v in raw.items()})
        except ValidationError as e:
            raise UsageError(f'invalid settings in {origin}: {e}')
        return {k: v for k, v in record.dict(exclude_unset=True).items() if v is not None}


def merge_layers(layers: List[Tuple[str, Dict[str, Any]]]) -> Dict[str, Any]:
    """
    Merge setting layers, lowest precedence first.

    A layer that sets ``passes`` discards the coverage rule of the layers
    below it, and a layer that sets ``coverage`` or ``max_passes`` discards
    their ``passes``. One layer may not set both.

    Examples::

        >>> merge_layers([('preset', {'coverage': 0.98, 'max_passes': 200}), ('flags', {'passes': 5})])
        {'passes': 5}
    """
    settings = {}
    for origin, layer in layers:
        fixed = 'passes' in layer
        target = any(name in layer for name in _COVERAGE_RULE)
        if fixed and target:
            raise UsageError(f'--passes cannot be combined with --coverage or --max-passes ({origin})')
        for name in (_COVERAGE_RULE if fixed else ('passes',) if target else ()):
            settings.pop(name, None)
        settings.update(layer)
    return settings


def load_config_file(path: str) -> Dict[str, Any]:
    """
    Read settings from a JSON object, or from the first record of a JSON
    Lines report written by an earlier run.
    """
    try:
        if path.endswith('.jsonl'):
            with jsonlines.open(path) as reader:
                raw = reader.read()
        else:
            with open(path, encoding='utf-8') as f:
                raw = json.load(f)
    except (json.JSONDecodeError, jsonlines.InvalidLineError, EOFError) as e:
        raise UsageError(f'cannot parse config file {path}: {e}')
    if not isinstance(raw, dict):
        raise UsageError(f'config file {path} must hold a JSON object')
    raw = {k: v for k, v in raw.items() if k not in _REPORT_ONLY_KEYS}
    return RenderSettings.layer(raw, f'config file {path}')


def _build_render_config(settings: Dict[str, Any]) -> RenderConfig:
    mode = Mode.parse(settings['mode'])
    if settings.get('passes') is not None:
        stop = StopRule.fixed(settings['passes'])
    else:
        stop = StopRule.until_coverage(settings['coverage'], settings['max_passes'])
    rect = threshold = None
    if mode.is_rect:
        rect = RectParams(lambda_=settings['lambda_'], lambda_small=settings['lambda_small'],
                          lambda_big=settings['lambda_big'], tau=settings['tau'])
    elif mode.is_threshold:
        threshold = ThresholdParams(pi_size=settings['pi'], tau_prime=settings['tau_prime'])
    return RenderConfig(
        mode=mode,
        background=Background.parse(settings['background']),
        seed=settings['seed'],
        grid=GridParams(s_min=settings['s_min'], s_max=settings['s_max'], delta=settings['delta']),
        rho=settings.get('rho') if mode is Mode.CIRCLE else None,
        rect=rect,
        threshold=threshold,
        mask=ChannelMask.parse(settings['channels']),
        stop=stop,
    )


def parse_invocation(argv: Optional[List[str]] = None) -> CliInvocation:
    """Parse and validate a command line. Raises UsageError."""
    ns = vars(build_parser().parse_args(argv))
    layers = [('defaults', dict(DEFAULTS))]
    preset = ns.get('preset')
    if preset is not None:
        layers.append((f'preset {preset}', RenderSettings.layer(PRESETS[preset], f'preset {preset}')))
    config_path = ns.get('config')
    if config_path is not None:
        try:
            layers.append((f'config file {config_path}', load_config_file(config_path)))
        except OSError as e:
            raise UsageError(f'cannot read config file {config_path}: {e}')
    layers.append(('flags', RenderSettings.layer({k: v for k, v in ns.items() if k in SETTING_NAMES}, 'flags')))
    settings = merge_layers(layers)

    absent = missing(settings, ('input', 'output', 'mode', 's_min', 's_max'))
    if absent:
        raise UsageError('missing required flags: ' + ', '.join(flag_name(n) for n in absent))
    try:
        mode = Mode.parse(settings['mode'])
    except ValueError as e:
        raise UsageError(str(e))
    absent = missing(settings, MODE_REQUIRED[mode])
    if absent:
        raise UsageError(f'{mode.value} mode requires ' + ', '.join(flag_name(n) for n in absent))
    if settings.get('passes') is None:
        absent = missing(settings, ('coverage', 'max_passes'))
        if absent:
            raise UsageError('requires --passes, or --coverage with --max-passes; missing '
                             + ', '.join(flag_name(n) for n in absent))

    suffix = os.path.splitext(settings['output'])[1].lower()
    if suffix in PIL_READ_SUFFIXES and suffix not in PIL_WRITE_SUFFIXES:
        raise UsageError(f'cannot write {suffix} output; use .ppm, .png or .bmp')

    seed_generated = settings.get('seed') is None
    if seed_generated:
        settings['seed'] = fresh_seed()
    try:
        cfg = _build_render_config(settings)
    except UsageError:
        raise
    except ValueError as e:
        raise UsageError(str(e))

    if ns.get('verbose'):
        log_level = logging.DEBUG
    elif ns.get('quiet'):
        log_level = logging.WARNING
    else:
        log_level = logging.INFO
    return CliInvocation(
        input=settings['input'],
        output=settings['output'],
        report=settings.get('report'),
        config=cfg,
        settings=settings,
        config_path=config_path,
        seed_generated=seed_generated,
        progress=ns.get('progress', False),
        log_level=log_level,
    )


def resolved_settings(inv: CliInvocation) -> Dict[str, Any]:
    """
    Settings relevant to the invocation's mode and stop rule, keyed by field
    name, in flag order.
    """
    cfg = inv.config
    keep = {'input', 'output', 'mode', 'background', 'seed', 's_min', 's_max', 'delta', 'channels'}
    keep.update(MODE_REQUIRED[cfg.mode])
    keep.update(('passes',) if cfg.stop.passes is not None else ('coverage', 'max_passes'))
    out = {}
    for name in SETTING_NAMES:
        if name in keep:
            out[name.rstrip('_')] = inv.settings.get(name)
    out['mode'] = cfg.mode.value
    out['background'] = cfg.background.value
    out['channels'] = cfg.mask.letters
    return out


def run_invocation(inv: CliInvocation) -> int:
    logger.info('seed %d%s', inv.config.seed, ' (generated)' if inv.seed_generated else '')
    try:
        with timeit('read'):
            src = read_image(inv.input)
    except (OSError, ImageFormatError) as e:
        logger.error('cannot read %s: %s', inv.input, e)
        return EXIT_IO
    try:
        with timeit('render'):
            result = render(src, inv.config, progress=inv.progress)
    except ValueError as e:
        logger.error('%s', e)
        return EXIT_VALIDATION
    try:
        with timeit('write'):
            write_image(result.canvas, inv.output)
        if inv.report is not None:
            write_report(inv, result)
    except OSError as e:
        logger.error('cannot write output: %s', e)
        return EXIT_IO
    logger.info('wrote %s after %d passes, coverage %.4f', inv.output, len(result.reports),
                result.cover.fraction())
    return EXIT_OK


def write_report(inv: CliInvocation, result):
    header = {'type': 'config', 'version': __version__, 'seed_generated': inv.seed_generated}
    header.update(resolved_settings(inv))
    summary = {
        'type': 'summary',
        'passes': len(result.reports),
        'coverage': result.cover.fraction(),
        'stop_reason': result.stop_reason.value,
        'output_sha256': sha256_file(inv.output),
    }
    with jsonlines.open(inv.report, mode='w') as writer:
        writer.write(header)
        writer.write_all(dict(type='pass', **record) for record in reports_to_records(result.reports))
        writer.write(summary)


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(
        format='%(asctime)s - %(levelname)s - %(name)s -   %(message)s',
        datefmt='%m/%d/%Y %H:%M:%S',
        level=logging.INFO,
    )
    try:
        inv = parse_invocation(argv)
    except UsageError as e:
        logger.error('usage error: %s', e)
        return EXIT_VALIDATION
    logging.getLogger().setLevel(inv.log_level)
    return run_invocation(inv)


if __name__ == '__main__':
    sys.exit(main())
