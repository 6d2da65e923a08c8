import os

import pytest

from sfckit.csbench import load_idx_images
from sfckit.strokes import stroke_images

MNIST_ENV = "SFCKIT_MNIST_IDX"


@pytest.fixture(scope="session")
def bench_images():
    """100 digit-like images for the scan benchmark.

    Uses the real dataset when SFCKIT_MNIST_IDX points at an IDX3 image
    file; otherwise falls back to the seeded synthetic stroke generator,
    which has the same white-on-black pen statistics.
    """
    mnist = os.environ.get(MNIST_ENV)
    if mnist and os.path.exists(mnist):
        return "mnist", load_idx_images(mnist, 100)
    return "synthetic-strokes", stroke_images(100, seed=7)
