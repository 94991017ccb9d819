"""SVG galleries of (path, image) pairs.

All coordinates are integers and attributes are written in a fixed order,
so the same input always produces byte-identical documents. Each panel
carries its layout constants (``data-x0``, ``data-dx``, ``data-dy``,
``data-baseline``) so :func:`extract_pairs` can read the walks back.
"""
from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .bijections import get_map
from .errors import LengthMismatch
from .families import DEFAULT_EXHAUSTIVE_LIMIT, enumerate_paths
from .paths import Path, validate

__all__ = ["RenderSpec", "render_pair", "render_pairs", "render_gallery", "extract_pairs"]

SVG_NS = "http://www.w3.org/2000/svg"


@dataclass(frozen=True)
class RenderSpec:
    cell_width: int = 240
    cell_height: int = 240
    columns: int = 5
    original_color: str = "blue"
    image_color: str = "red"
    show_grid: bool = True
    show_axis: bool = True
    unit: int = 24  # pixels per lattice unit, shrunk if the cell is too small
    padding: int = 16

    def __post_init__(self):
        for name in ("cell_width", "cell_height", "columns", "unit"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.padding < 0 or 2 * self.padding >= min(self.cell_width, self.cell_height):
            raise ValueError("padding must leave room inside the cell")


def _points(xs: Sequence[int], ys: Sequence[int]) -> str:
    return " ".join(f"{x},{y}" for x, y in zip(xs, ys))


def render_pairs(pairs: Sequence[Tuple[Path, Path]], spec: RenderSpec = RenderSpec(),
                 title: str = "") -> str:
    """One panel per pair, laid out row-major in ``spec.columns`` columns."""
    if not pairs:
        raise ValueError("nothing to render")
    length = len(pairs[0][0])
    for p, q in pairs:
        if len(p) != len(q) or len(p) != length:
            raise LengthMismatch(f"cannot draw paths of lengths {len(p)} and {len(q)} together")
    steps = length - 1
    lo = min(0, *(min(min(p), min(q)) for p, q in pairs))
    hi = max(0, *(max(max(p), max(q)) for p, q in pairs))
    inner_w = spec.cell_width - 2 * spec.padding
    inner_h = spec.cell_height - 2 * spec.padding
    dx = max(inner_w // steps, 1)
    dy = max(min(spec.unit, inner_h // max(hi - lo, 1)), 1)

    cols = min(spec.columns, len(pairs))
    rows = -(-len(pairs) // cols)
    width, height = cols * spec.cell_width, rows * spec.cell_height
    out = [
        f'<svg xmlns="{SVG_NS}" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" data-panels="{len(pairs)}">'
    ]
    if title:
        out.append(f"<title>{title}</title>")
    out.append(f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>')
    for k, (p, q) in enumerate(pairs):
        cx = (k % cols) * spec.cell_width
        cy = (k // cols) * spec.cell_height
        x0 = cx + spec.padding
        baseline = cy + spec.padding + hi * dy
        xs = [x0 + t * dx for t in range(length)]
        out.append(f'<g class="panel" data-index="{k}" data-x0="{x0}" data-dx="{dx}" '
                   f'data-dy="{dy}" data-baseline="{baseline}">')
        out.append(f'<rect x="{cx}" y="{cy}" width="{spec.cell_width}" '
                   f'height="{spec.cell_height}" fill="none" stroke="#999999"/>')
        if spec.show_grid:
            y_top, y_bot = baseline - hi * dy, baseline - lo * dy
            for x in xs:
                out.append(f'<line class="grid" x1="{x}" y1="{y_top}" x2="{x}" '
                           f'y2="{y_bot}" stroke="#dddddd"/>')
            for v in range(lo, hi + 1):
                y = baseline - v * dy
                out.append(f'<line class="grid" x1="{xs[0]}" y1="{y}" x2="{xs[-1]}" '
                           f'y2="{y}" stroke="#dddddd"/>')
        if spec.show_axis:
            out.append(f'<line class="axis" x1="{xs[0]}" y1="{baseline}" x2="{xs[-1]}" '
                       f'y2="{baseline}" stroke="black"/>')
        for cls, path, color in (("original", p, spec.original_color),
                                 ("image", q, spec.image_color)):
            ys = [baseline - v * dy for v in path]
            out.append(f'<polyline class="{cls}" points="{_points(xs, ys)}" '
                       f'fill="none" stroke="{color}" stroke-width="2"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_pair(p: Path, q: Path, spec: RenderSpec = RenderSpec()) -> str:
    return render_pairs([(p, q)], spec)


def render_gallery(n: int, bijection: str, spec: RenderSpec = RenderSpec(), *,
                   limit: int = DEFAULT_EXHAUSTIVE_LIMIT, override: bool = False) -> str:
    """Draw every domain path of ``bijection`` at size ``n`` next to its image."""
    info = get_map(bijection)
    pairs = [(p, info.forward(p))
             for p in enumerate_paths(n, info.domain, limit=limit, override=override)]
    return render_pairs(pairs, spec, title=f"{info.name} n={n}")


def extract_pairs(document: str) -> List[Tuple[Path, Path]]:
    """Recover the (original, image) walks from a document made by this module."""
    root = ET.fromstring(document)
    pairs = []
    for g in root.iter(f"{{{SVG_NS}}}g"):
        if g.get("class") != "panel":
            continue
        x0, dx = int(g.get("data-x0")), int(g.get("data-dx"))
        dy, base = int(g.get("data-dy")), int(g.get("data-baseline"))
        found = {}
        for line in g.iter(f"{{{SVG_NS}}}polyline"):
            values = []
            for t, pt in enumerate(line.get("points").split()):
                x, y = (int(v) for v in pt.split(","))
                if x != x0 + t * dx or (base - y) % dy:
                    raise ValueError(f"vertex {pt} is off the lattice")
                values.append((base - y) // dy)
            found[line.get("class")] = validate(values)
        pairs.append((found["original"], found["image"]))
    return pairs
