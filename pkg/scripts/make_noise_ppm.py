#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Write a seeded uniform-noise or gradient PPM, handy as a render input.

    python make_noise_ppm.py noise.ppm --width 128 --height 128 --seed 0
"""
import argparse
import logging
import sys

import numpy as np

try:
    from impressionist.imgio import write_ppm
    from impressionist.raster import Raster
except ModuleNotFoundError:
    sys.path.append('..')  # path hacking
    from impressionist.imgio import write_ppm
    from impressionist.raster import Raster

logger = logging.getLogger(__name__)


def make_raster(width, height, seed, kind):
    if kind == 'noise':
        data = np.random.default_rng(seed).integers(0, 256, (height, width, 3), dtype=np.uint8)
    else:
        xs = np.linspace(0, 255, width, dtype=np.float64)
        ys = np.linspace(0, 255, height, dtype=np.float64)
        data = np.empty((height, width, 3), dtype=np.uint8)
        data[..., 0] = xs[None, :]
        data[..., 1] = ys[:, None]
        data[..., 2] = 255 - (xs[None, :] + ys[:, None]) / 2
    return Raster(data)


if __name__ == '__main__':
    logging.basicConfig(level=logging.INFO)
    parser = argparse.ArgumentParser()

    parser.add_argument('output_path', type=str)
    parser.add_argument('--width', type=int, default=128)
    parser.add_argument('--height', type=int, default=128)
    parser.add_argument('--seed', type=int, default=0)
    parser.add_argument('--kind', choices=['noise', 'gradient'], default='noise')

    args = parser.parse_args()

    raster = make_raster(args.width, args.height, args.seed, args.kind)
    with open(args.output_path, 'wb') as f:
        f.write(write_ppm(raster))
    logger.info('wrote %dx%d %s image to %s', args.width, args.height, args.kind, args.output_path)
