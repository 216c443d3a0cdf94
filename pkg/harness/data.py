"""Synthetic shapes dataset: colored rectangle/circle/triangle scenes.

Every scene contains all three shape classes on a textured gradient
background, with exact masks. Scenes are a pure function of
(dataset seed, split, index), so regenerating a dataset reproduces the
same files byte for byte.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np
from PIL import Image

from .config import DatasetConfig

SPLITS = ("train", "val", "test")
CLASS_BACKGROUND = 0
CLASS_RECT = 1
CLASS_CIRCLE = 2
CLASS_TRIANGLE = 3


def _background(rng: np.random.Generator, size: int) -> np.ndarray:
    corners = rng.uniform(20, 150, size=(2, 2, 3))
    yy, xx = np.mgrid[0:size, 0:size] / (size - 1)
    top = corners[0, 0] * (1 - xx[..., None]) + corners[0, 1] * xx[..., None]
    bottom = corners[1, 0] * (1 - xx[..., None]) + corners[1, 1] * xx[..., None]
    base = top * (1 - yy[..., None]) + bottom * yy[..., None]
    return base + rng.normal(0, 6, size=(size, size, 3))


def _shape_color(rng: np.random.Generator, dominant: int) -> np.ndarray:
    color = rng.uniform(0, 70, size=3)
    color[dominant] = rng.uniform(180, 255)
    return color


def _paint(canvas, mask, region, color, class_id, rng):
    noise = rng.normal(0, 8, size=(int(region.sum()), 3))
    canvas[region] = color + noise
    mask[region] = class_id


def render_scene(rng: np.random.Generator, size: int):
    """One (c, h, w) uint8 image plus its (h, w) class mask."""
    canvas = _background(rng, size)
    mask = np.zeros((size, size), dtype=np.uint8)
    yy, xx = np.mgrid[0:size, 0:size]

    # Rectangle, red-dominant.
    rw, rh = rng.integers(12, 27, size=2)
    ry, rx = rng.integers(0, size - rh), rng.integers(0, size - rw)
    region = (yy >= ry) & (yy < ry + rh) & (xx >= rx) & (xx < rx + rw)
    _paint(canvas, mask, region, _shape_color(rng, 0), CLASS_RECT, rng)

    # Circle, green-dominant.
    rad = rng.integers(7, 14)
    cy, cx = rng.integers(rad, size - rad, size=2)
    region = (yy - cy) ** 2 + (xx - cx) ** 2 <= rad**2
    _paint(canvas, mask, region, _shape_color(rng, 1), CLASS_CIRCLE, rng)

    # Upward triangle, blue-dominant.
    th = rng.integers(14, 27)
    ty, tx = rng.integers(0, size - th), rng.integers(th // 2, size - th // 2)
    rows = yy - ty
    region = (rows >= 0) & (rows < th) & (np.abs(xx - tx) * 2 <= rows)
    _paint(canvas, mask, region, _shape_color(rng, 2), CLASS_TRIANGLE, rng)

    image = np.clip(canvas, 0, 255).astype(np.uint8).transpose(2, 0, 1)
    return image, mask


def write_png(path: Path, array: np.ndarray, mode: str) -> None:
    if mode == "RGB":
        Image.fromarray(array.transpose(1, 2, 0), mode="RGB").save(path, format="PNG")
    else:
        Image.fromarray(array, mode="L").save(path, format="PNG")


def generate_dataset(spec: DatasetConfig, out_root: Path) -> dict:
    """Write images/<split>/ and masks/<split>/ PNG pairs; returns counts."""
    out_root = Path(out_root)
    counts = {"train": spec.train, "val": spec.val, "test": spec.test}
    for split_idx, split in enumerate(SPLITS):
        img_dir = out_root / "images" / split
        mask_dir = out_root / "masks" / split
        img_dir.mkdir(parents=True, exist_ok=True)
        mask_dir.mkdir(parents=True, exist_ok=True)
        for i in range(counts[split]):
            rng = np.random.default_rng([spec.seed, split_idx, i])
            image, mask = render_scene(rng, spec.image_size)
            assert mask.max() < spec.num_classes
            name = f"scene_{i:04d}.png"
            write_png(img_dir / name, image, "RGB")
            write_png(mask_dir / name, mask, "L")
    return counts
