#!/usr/bin/env python3
"""Locality metric: contiguous index runs needed to cover query rectangles.

Fewer runs means a rectangle of cells maps to fewer separate ranges of
the 1D order, which is what makes a scan order cache- and
storage-friendly.

Run: python demos/locality_runs.py
"""

import sfckit as sk


def main():
    side = 64
    stats = sk.locality_benchmark(
        ["aztec", "hilbert", "serpentine", "raster-v", "zigzag"],
        side=side,
        samples=500,
        seed=2024,
    )
    print(stats.summary())

    print("\nHand-picked 3x3 window (cells 1..3 x 1..3) on the 4x4 grids:")
    from sfckit.analysis import count_runs

    for name in ("aztec", "hilbert", "serpentine", "zigzag"):
        scan = sk.scan_at_side(name, 4)
        print(f"  {name:<10} {count_runs(scan, 1, 1, 3, 3)} run(s)")


if __name__ == "__main__":
    main()
