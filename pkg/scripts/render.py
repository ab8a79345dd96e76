#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Render an image with colour spots. See docs/2_rendering.md.

    python render.py --input photo.ppm --output dots.ppm --preset dots --seed 7
"""
import sys

try:
    from impressionist.cli import main
except ModuleNotFoundError:
    sys.path.append('..')  # path hacking
    from impressionist.cli import main


if __name__ == '__main__':
    sys.exit(main())
