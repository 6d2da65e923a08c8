#!/usr/bin/env python3
"""Rectangular clusters: enumeration, the four size families, and lifting.

A cluster is a rectangle whose curve indices form one contiguous run, so
it can be fetched with a single range read.  The Aztec curve keeps whole
2D rectangles contiguous that the Hilbert curve splits apart.

Run: python demos/cluster_census.py
"""

import sfckit as sk


def main():
    aztec1 = sk.path("aztec", 1)
    report = sk.enumerate_clusters(aztec1)
    print("Aztec order 1 cluster families (width x height: count):")
    print(report.summary())

    print("\nThe four families that scale with the order:")
    families = {
        "column, area 4^(2n-1)": report.find(0, 0, 0, 3),
        "square, area 9*16^(n-1)": report.find(1, 1, 3, 3),
        "2x3,    area 6*16^(n-1)": report.find(2, 1, 3, 3),
        "3x4,    area 12*16^(n-1)": report.find(1, 0, 3, 3),
    }
    for label, rect in families.items():
        print(f"  {label}: cells ({rect.x0},{rect.y0})..({rect.x1},{rect.y1}), "
              f"indices {rect.min_index}..{rect.max_index}")

    print("\nLifting to higher orders (each order-1 cell becomes an aligned block):")
    for order in (2, 3):
        print(f"  order {order}:")
        for label, rect in families.items():
            lifted = sk.lift_cluster(rect, order)
            print(f"    {label} -> area {lifted.area}, indices {lifted.min_index}..{lifted.max_index}")

    print("\nHilbert contrast on the same 4x4 grid:")
    hilbert = sk.enumerate_clusters(sk.path("hilbert", 2))
    squares = [c for c in hilbert.clusters if c.width == 3 and c.height == 3]
    print(f"  3x3 clusters under Hilbert: {len(squares)} (the Aztec tour has one, indices 4..12)")


if __name__ == "__main__":
    main()
