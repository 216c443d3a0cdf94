"""Shared procedural test imagery for the demo scripts."""

import numpy as np


def make_sample_image(size=64, seed=7):
    """A colorful synthetic scene: gradient sky, ground, sun, box."""
    rng = np.random.default_rng(seed)
    yy, xx = np.mgrid[0:size, 0:size].astype(np.float64) / size
    r = 80 + 120 * yy + 10 * rng.standard_normal((size, size))
    g = 120 + 80 * xx + 10 * rng.standard_normal((size, size))
    b = 200 - 140 * yy + 10 * rng.standard_normal((size, size))

    cy, cx, rad = size * 0.3, size * 0.7, size * 0.15
    sun = (np.mgrid[0:size, 0:size][0] - cy) ** 2 + (
        np.mgrid[0:size, 0:size][1] - cx
    ) ** 2 < rad**2
    r[sun], g[sun], b[sun] = 250, 220, 60

    y0, y1 = int(size * 0.6), int(size * 0.9)
    x0, x1 = int(size * 0.15), int(size * 0.45)
    r[y0:y1, x0:x1], g[y0:y1, x0:x1], b[y0:y1, x0:x1] = 170, 60, 40

    return np.clip(np.stack([r, g, b]), 0, 255).astype(np.uint8)
