"""Synthetic handwritten-stroke images.

Seeded generator of 28x28 white-on-black pen strokes with the same rough
statistics as scanned digits (centered smooth strokes, dark margins).
Lets the scan-order benchmark and its demos run end to end when no real
digit dataset is on disk; any IDX3 file can be substituted.
"""

from __future__ import annotations

import numpy as np

from .csbench import GrayImage

__all__ = ["stroke_images"]

_SMOOTH = np.array([[1, 2, 1], [2, 4, 2], [1, 2, 1]], dtype=np.float64) / 16.0


def _smooth(canvas: np.ndarray) -> np.ndarray:
    padded = np.pad(canvas, 1)
    out = np.zeros_like(canvas)
    for dy in range(3):
        for dx in range(3):
            out += _SMOOTH[dy, dx] * padded[dy : dy + 28, dx : dx + 28]
    return out


def stroke_images(count: int, seed: int = 0) -> list[GrayImage]:
    """Generate `count` stroke images, deterministically from the seed."""
    rng = np.random.default_rng(seed)
    images = []
    for _ in range(count):
        canvas = np.zeros((28, 28), dtype=np.float64)
        for _ in range(int(rng.integers(1, 4))):
            pos = rng.uniform(8.0, 20.0, size=2)
            heading = rng.uniform(0.0, 2.0 * np.pi)
            for _ in range(int(rng.integers(12, 28))):
                heading += rng.normal(0.0, 0.35)
                pos += 1.1 * np.array([np.cos(heading), np.sin(heading)])
                pos = np.clip(pos, 4.0, 23.0)
                cx, cy = pos
                x0, y0 = int(cx) - 2, int(cy) - 2
                for yy in range(max(y0, 0), min(y0 + 5, 28)):
                    for xx in range(max(x0, 0), min(x0 + 5, 28)):
                        r2 = (xx - cx) ** 2 + (yy - cy) ** 2
                        canvas[yy, xx] += np.exp(-r2 / 1.6)
        canvas = _smooth(canvas)
        peak = canvas.max()
        if peak > 0:
            canvas = np.clip(canvas / peak * 1.5, 0.0, 1.0)
        images.append(GrayImage(np.round(canvas * 255.0).astype(np.uint8)))
    return images
