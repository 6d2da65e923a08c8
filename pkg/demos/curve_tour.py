#!/usr/bin/env python3
"""Tour of curve construction: grammars, validation, and index queries.

Run: python demos/curve_tour.py
"""

import sfckit as sk


def show_tour(name, order):
    scan = sk.path(name, order)
    print(f"\n{name} order {order}: {len(scan)} cells on a {scan.width}x{scan.height} grid")
    print("  first 8 cells:", [tuple(c) for c in scan.cells[:8]])
    rep = sk.verify_curve(scan)
    print(" ", rep.summary())


def main():
    print("Built-in grammars and their validation verdicts:")
    for spec in (sk.AZTEC, sk.HILBERT, sk.PEANO):
        verdict = sk.validate(spec)
        b = spec.grid_factor
        print(f"  {spec.name}: b={b}, {b * b} slots, entry {spec.entry_cell}, "
              f"exit {spec.exit_cell} -> {'ok' if verdict.ok else verdict.failures}")

    show_tour("aztec", 1)
    show_tour("aztec", 2)
    show_tour("hilbert", 3)
    show_tour("peano", 2)

    print("\nOriented copies of the Aztec pattern (order 2 corners):")
    for op in (sk.AZTEC_A, sk.AZTEC_B, sk.AZTEC_C, sk.AZTEC_D):
        scan = sk.expand(sk.AZTEC, op, 2)
        print(f"  {op.name:<15} enters {scan.cell(0)}, exits {scan.cell(len(scan) - 1)}")

    print("\nIndex queries without materializing the path (aztec order 6, 16.7M cells):")
    for d in (0, 123_456, 16**6 - 1):
        cell = sk.d2xy("aztec", 6, d)
        print(f"  d={d:>10} -> {cell} -> d={sk.xy2d('aztec', 6, cell)}")


if __name__ == "__main__":
    main()
