"""SVG figures for structures, optionally with a labeling drawn in.

Layout conventions: the concentric family is centered at the origin with
the first vertex of every ring at angle 90 degrees and ring radii
decreasing outward-in; the root-sharing family places the root at the top
and shrinks each ring toward it.  Coordinates live in a unit-scaled canvas
rendered through a fixed viewBox, so output is byte-stable for identical
inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainMismatch
from .structure import CENTER, Family, IncidenceStructure, SegmentKind
from .verify import Labeling

VIEW_BOX = "-1.2 -1.2 2.4 2.4"
STROKE = "#333333"
POINT_RADIUS = 0.035
FONT_SIZE = 0.09


@dataclass(frozen=True)
class LayoutPoint:
    point: int
    x: float
    y: float


def _ring_scale(t: int, rings: int) -> float:
    return 1.0 - 0.5 * (t - 1) / max(1, rings - 1)


def layout(structure: IncidenceStructure) -> list[LayoutPoint]:
    """Coordinates for every point, ordered by point id."""
    spec = structure.spec
    n, k = spec.n, spec.k
    step = 2.0 * math.pi / n
    start = math.pi / 2.0

    def vertex(m: int, scale: float) -> tuple[float, float]:
        angle = start + m * step
        return scale * math.cos(angle), scale * math.sin(angle)

    points = [LayoutPoint(CENTER, 0.0, 0.0) if spec.family is Family.MAGIC else LayoutPoint(CENTER, 0.0, 1.0)]
    root = vertex(0, 1.0)
    for pid in range(1, structure.point_count):
        t, q = spec.ring_position(pid)
        scale = _ring_scale(t, spec.rings)
        edge_index, offset = divmod(q - 1, k)
        frac = offset / k
        if spec.family is Family.MAGIC:
            ax, ay = vertex(edge_index, scale)
            bx, by = vertex(edge_index + 1, scale)
        else:
            # Path vertices start one step past the root and never wrap back.
            ax, ay = vertex(edge_index + 1, 1.0)
            bx, by = vertex(edge_index + 2, 1.0)
        x = ax + frac * (bx - ax)
        y = ay + frac * (by - ay)
        if spec.family is Family.DEGENERATE:
            x = root[0] + scale * (x - root[0])
            y = root[1] + scale * (y - root[1])
        points.append(LayoutPoint(pid, x, y))
    return points


def _draw_order(structure: IncidenceStructure, seg_points: tuple[int, ...], kind: SegmentKind) -> list[int]:
    # Central segments of the concentric family store both half-chords
    # outermost-first; reverse the far half so the polyline runs monotonically.
    if kind is SegmentKind.CENTRAL and structure.spec.family is Family.MAGIC:
        rings = structure.spec.rings
        return list(seg_points[: rings + 1]) + list(reversed(seg_points[rings + 1 :]))
    return list(seg_points)


def _fmt(v: float) -> str:
    return f"{v:.6f}"


def to_svg(structure: IncidenceStructure, labeling: Labeling | None = None) -> str:
    """Render the structure as an SVG document string.

    One polyline per segment, one circle per point, and one text element
    per point when a labeling is supplied.  The y axis is flipped at
    output time so angle 90 degrees appears at the top.
    """
    if labeling is not None and set(labeling.values) != set(structure.point_ids()):
        raise DomainMismatch("labeling does not cover exactly the structure's points")

    coords = {lp.point: (lp.x, lp.y) for lp in layout(structure)}
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{VIEW_BOX}">',
    ]
    for seg in structure.segments:
        pts = " ".join(
            f"{_fmt(coords[p][0])},{_fmt(-coords[p][1])}"
            for p in _draw_order(structure, seg.points, seg.kind)
        )
        lines.append(f'<polyline fill="none" stroke="{STROKE}" stroke-width="0.012" points="{pts}"/>')
    for pid in structure.point_ids():
        x, y = coords[pid]
        lines.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(-y)}" r="{POINT_RADIUS}" '
            f'fill="#ffffff" stroke="{STROKE}" stroke-width="0.01"/>'
        )
    if labeling is not None:
        for pid in structure.point_ids():
            x, y = coords[pid]
            lines.append(
                f'<text x="{_fmt(x)}" y="{_fmt(-y)}" font-size="{FONT_SIZE}" '
                f'text-anchor="middle" dominant-baseline="central">{labeling.values[pid]}</text>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
