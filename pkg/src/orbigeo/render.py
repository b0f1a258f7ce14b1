"""SVG rendering of fundamental quadrilaterals and axis segments.

The half-plane window [-2.5, 2.5] x (0, 2.5] maps linearly onto the
viewport; geodesics appear as circular arcs or vertical lines.
"""

from __future__ import annotations

import math

from .halfplane import intersect_geodesics, segment_contains
from .selfint import fundamental_segment
from .triangle import build_group, fundamental_domain
from .report import dumps

WINDOW = (-2.5, 2.5, 0.0, 2.5)   # x range and y range of the drawn region
SCALE = 160.0                    # pixels per half-plane unit


def _px(z):
    x0, x1, y0, y1 = WINDOW
    return ((z.real - x0) * SCALE, (y1 - z.imag) * SCALE)


def _arc_path(line, z1, z2):
    """SVG path for the geodesic arc from z1 to z2."""
    p1, p2 = _px(z1), _px(z2)
    if line.is_vertical:
        return f"M {p1[0]:.3f} {p1[1]:.3f} L {p2[0]:.3f} {p2[1]:.3f}"
    r = line.radius * SCALE
    a1 = math.atan2(z1.imag, z1.real - line.center)
    a2 = math.atan2(z2.imag, z2.real - line.center)
    sweep = 1 if a2 > a1 else 0
    return (
        f"M {p1[0]:.3f} {p1[1]:.3f} "
        f"A {r:.3f} {r:.3f} 0 0 {sweep} {p2[0]:.3f} {p2[1]:.3f}"
    )


def axis_chord(group, word):
    """Clip the axis of a pair element to the fundamental quadrilateral.

    Returns (axis geodesic, [(point, side index), ...]) for the crossings of
    the axis with the quadrilateral's sides, ordered along the axis.
    """
    domain = fundamental_domain(group)
    g = group.pair_element(word)
    axis = fundamental_segment(group, g).carrier
    crossings = []
    for idx, (start, end, side) in enumerate(domain.quad_edges):
        hit = intersect_geodesics(axis, side)
        if hit is None:
            continue
        point, transverse = hit
        if transverse and segment_contains(side, start, end, point, tol=1e-9):
            crossings.append((point, idx))
    crossings.sort(key=lambda item: (item[0].real, item[0].imag))
    return axis, crossings


def render_domain(sig, axis_word=None, prov=None):
    """SVG picture of the fundamental quadrilateral, with vertex markers at
    i and i/lambda and, optionally, the chord of one pair element's axis."""
    group = build_group(sig)
    domain = fundamental_domain(group)
    x0, x1, y0, y1 = WINDOW
    width, height = (x1 - x0) * SCALE, (y1 - y0) * SCALE

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">',
    ]
    if prov is not None:
        parts.append(f"<!-- provenance: {dumps(prov)} -->")
    parts.append(f'<rect width="{width:.0f}" height="{height:.0f}" fill="white"/>')
    floor = (y1 - y0) * SCALE
    parts.append(
        f'<line class="boundary" x1="0" y1="{floor:.3f}" x2="{width:.0f}" '
        f'y2="{floor:.3f}" stroke="black" stroke-width="1.5"/>'
    )
    for start, end, side in domain.quad_edges:
        parts.append(
            f'<path class="side" d="{_arc_path(side, start, end)}" '
            f'fill="none" stroke="black" stroke-width="1.2"/>'
        )
    top, bottom = group.vertices[0], group.vertices[1]
    for z in (top, bottom):
        px, py = _px(z)
        parts.append(
            f'<circle class="vertex" cx="{px:.3f}" cy="{py:.3f}" r="3" fill="black"/>'
        )
    if axis_word is not None:
        axis, crossings = axis_chord(group, axis_word)
        if len(crossings) >= 2:
            z1, z2 = crossings[0][0], crossings[-1][0]
            parts.append(
                f'<path class="axis" d="{_arc_path(axis, z1, z2)}" '
                f'fill="none" stroke="crimson" stroke-width="1.6"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
