"""Deterministic SVG rendering of scan paths and cluster overlays.

Output is plain SVG 1.1 text built from the inputs alone (no timestamps,
no dict-order dependence), so equal inputs give byte-identical documents.
"""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import ClusterReport
from .scan import ScanOrder

__all__ = ["RenderStyle", "render_path", "render_clusters", "DEFAULT_PALETTE"]

# Fill colors for cluster families: dark orange, yellow, light orange, pink.
DEFAULT_PALETTE = ("#d95f02", "#ffd92f", "#fdae61", "#f78fb3")


@dataclass(frozen=True, slots=True)
class RenderStyle:
    cell_size: float = 20.0
    stroke_width: float = 2.0
    palette: tuple[str, ...] = DEFAULT_PALETTE
    show_grid: bool = False

    def __post_init__(self):
        if self.cell_size <= 0:
            raise ValueError("cell_size must be positive")


def _fmt(v: float) -> str:
    f = float(v)
    return str(int(f)) if f.is_integer() else f"{f:g}"


def _center(style: RenderStyle, height: int, x: int, y: int) -> tuple[float, float]:
    # Grid origin is bottom-left; SVG y points down.
    return (x + 0.5) * style.cell_size, (height - y - 0.5) * style.cell_size


def _document(scan: ScanOrder, style: RenderStyle, body: list[str]) -> str:
    w = scan.width * style.cell_size
    h = scan.height * style.cell_size
    head = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(w)}" height="{_fmt(h)}" viewBox="0 0 {_fmt(w)} {_fmt(h)}">',
        f'<rect x="0" y="0" width="{_fmt(w)}" height="{_fmt(h)}" fill="#ffffff"/>',
    ]
    return "\n".join(head + body + ["</svg>"]) + "\n"


def _grid_lines(scan: ScanOrder, style: RenderStyle) -> list[str]:
    s = style.cell_size
    w, h = scan.width * s, scan.height * s
    lines = []
    for i in range(scan.width + 1):
        lines.append(f'<line x1="{_fmt(i * s)}" y1="0" x2="{_fmt(i * s)}" y2="{_fmt(h)}" stroke="#cccccc" stroke-width="1"/>')
    for j in range(scan.height + 1):
        lines.append(f'<line x1="0" y1="{_fmt(j * s)}" x2="{_fmt(w)}" y2="{_fmt(j * s)}" stroke="#cccccc" stroke-width="1"/>')
    return lines


def _polyline(scan: ScanOrder, style: RenderStyle) -> str:
    points = " ".join(
        f"{_fmt(px)},{_fmt(py)}"
        for px, py in (_center(style, scan.height, int(x), int(y)) for x, y in scan.cells)
    )
    return (
        f'<polyline points="{points}" fill="none" stroke="#1a1a1a" '
        f'stroke-width="{_fmt(style.stroke_width)}" stroke-linejoin="round" stroke-linecap="round"/>'
    )


def render_path(scan: ScanOrder, style: RenderStyle | None = None) -> str:
    """SVG with one polyline through the cell centers in index order."""
    style = style or RenderStyle()
    body = []
    if style.show_grid:
        body.extend(_grid_lines(scan, style))
    body.append(_polyline(scan, style))
    return _document(scan, style, body)


def render_clusters(scan: ScanOrder, report: ClusterReport, style: RenderStyle | None = None) -> str:
    """SVG with cluster rectangles filled beneath the path polyline.

    Each (width, height) family gets one palette color, assigned in
    sorted family order; the palette cycles if there are more families
    than colors.
    """
    style = style or RenderStyle()
    if (report.width, report.height) != (scan.width, scan.height):
        raise ValueError(
            f"cluster report is for a {report.width}x{report.height} grid, "
            f"scan is {scan.width}x{scan.height}"
        )
    if report.clusters and not style.palette:
        raise ValueError("palette must be non-empty when clusters are drawn")
    color_of = {
        family: style.palette[i % len(style.palette)]
        for i, family in enumerate(sorted({(c.width, c.height) for c in report.clusters}))
    }
    s = style.cell_size
    body = []
    for c in report.clusters:
        px = c.x0 * s
        py = (scan.height - 1 - c.y1) * s
        body.append(
            f'<rect x="{_fmt(px)}" y="{_fmt(py)}" width="{_fmt(c.width * s)}" '
            f'height="{_fmt(c.height * s)}" fill="{color_of[(c.width, c.height)]}" '
            f'fill-opacity="0.75" stroke="none"/>'
        )
    if style.show_grid:
        body.extend(_grid_lines(scan, style))
    body.append(_polyline(scan, style))
    return _document(scan, style, body)
