#!/usr/bin/env python3
"""Render an SVG gallery: curve paths and cluster overlays.

Writes into demos/out/.  Run: python demos/draw_gallery.py
"""

import pathlib

import sfckit as sk

OUT = pathlib.Path(__file__).parent / "out"


def main():
    OUT.mkdir(exist_ok=True)
    style = sk.RenderStyle(cell_size=24, stroke_width=3, show_grid=False)

    for name, orders in (("aztec", (1, 2, 3)), ("hilbert", (1, 2, 3)), ("peano", (1, 2))):
        for order in orders:
            scan = sk.path(name, order)
            target = OUT / f"{name}-order{order}.svg"
            target.write_text(sk.render_path(scan, style), encoding="utf-8")
            print(f"wrote {target}")

    # cluster overlays: the four scaling families at orders 1 and 2
    for order in (1, 2):
        scan = sk.path("aztec", order)
        base = sk.enumerate_clusters(sk.path("aztec", 1), 16)
        picks = [base.find(0, 0, 0, 3), base.find(1, 1, 3, 3), base.find(2, 1, 3, 3), base.find(1, 0, 3, 3)]
        report = sk.enumerate_clusters(scan)
        report.clusters = [sk.lift_cluster(rect, order) for rect in picks]
        target = OUT / f"aztec-order{order}-clusters.svg"
        target.write_text(sk.render_clusters(scan, report, style), encoding="utf-8")
        print(f"wrote {target}")


if __name__ == "__main__":
    main()
