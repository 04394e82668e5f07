"""SVG drawings of planar solutions.

The drawing shows the demand points, the upright rectangle ``[q, p]``, the
two 45° construction lines from its lower-left and upper-right corners,
and the optimal segment as a single ``polyline.solution``. Constrained
drawings add the per-point cap squares and, when the optimal segment meets
the feasible box, its feasible part as a heavier ``line.feasible``.

Geometry lives inside a ``scale(1,-1)`` group so element coordinates are
the problem coordinates themselves.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET

import numpy as np

from .errors import DimensionMismatchError
from .linalg import TropVector
from .location import LocationInstance, SolutionFamily, SolveReport

PADDING = 10.0
SVG_NS = "http://www.w3.org/2000/svg"


def _n(x: float) -> str:
    v = float(f"{float(x):.12g}")
    return format(0.0 if v == 0 else v, ".12g")


def _segment_box(family: SolutionFamily):
    lo, hi = family.lower, family.upper
    return np.minimum(lo, hi), np.maximum(lo, hi)


def render_svg(inst: LocationInstance, report: SolveReport) -> str:
    if inst.n != 2:
        raise DimensionMismatchError("SVG output is only available for planar instances")

    inter = report.intermediate
    if inter is None:
        family = report.family
    else:
        family = SolutionFamily(inter.lambda0, TropVector(inter.p0), TropVector(inter.q0))
    p, q = family.p_array, family.q_array
    start, end = family.point(1.0), family.point(0.0)

    xs = [inst.points[:, 0], [p[0], q[0], start[0], end[0]]]
    ys = [inst.points[:, 1], [p[1], q[1], start[1], end[1]]]
    if inter is not None:
        caps = np.maximum(inst.caps, 0.0)
        xs += [inst.points[:, 0] - caps, inst.points[:, 0] + caps]
        ys += [inst.points[:, 1] - caps, inst.points[:, 1] + caps]
    xmin, xmax = float(np.min(np.concatenate(xs))), float(np.max(np.concatenate(xs)))
    ymin, ymax = float(np.min(np.concatenate(ys))), float(np.max(np.concatenate(ys)))
    width = xmax - xmin + 2 * PADDING
    height = ymax - ymin + 2 * PADDING

    svg = ET.Element(
        "svg",
        {
            "xmlns": SVG_NS,
            "version": "1.1",
            "viewBox": " ".join(_n(v) for v in (xmin - PADDING, -(ymax + PADDING), width, height)),
        },
    )
    g = ET.SubElement(svg, "g", {"transform": "scale(1,-1)", "fill": "none", "stroke": "black"})
    stroke = _n(max(width, height) / 400)

    ET.SubElement(
        g,
        "rect",
        {
            "class": "bounding-box",
            "x": _n(q[0]),
            "y": _n(q[1]),
            "width": _n(p[0] - q[0]),
            "height": _n(p[1] - q[1]),
            "stroke-width": stroke,
        },
    )
    for (x1, y1), (x2, y2) in (((q[0], q[1]), end), ((p[0], p[1]), start)):
        ET.SubElement(
            g,
            "line",
            {
                "class": "construction",
                "x1": _n(x1), "y1": _n(y1), "x2": _n(x2), "y2": _n(y2),
                "stroke-width": stroke,
                "stroke-dasharray": _n(float(stroke) * 4),
            },
        )

    if inter is not None:
        for (rx, ry), d in zip(inst.points, inst.caps):
            if d < 0:
                continue
            ET.SubElement(
                g,
                "rect",
                {
                    "class": "cap",
                    "x": _n(rx - d), "y": _n(ry - d),
                    "width": _n(2 * d), "height": _n(2 * d),
                    "stroke": "gray",
                    "stroke-width": stroke,
                },
            )

    ET.SubElement(
        g,
        "polyline",
        {
            "class": "solution",
            "points": f"{_n(start[0])},{_n(start[1])} {_n(end[0])},{_n(end[1])}",
            "stroke-width": _n(float(stroke) * 3),
        },
    )

    if inter is not None:
        lo, hi = _segment_box(family)
        flo, fhi = np.maximum(lo, inter.p1), np.minimum(hi, inter.q1)
        if np.all(flo <= fhi + 1e-9):
            ET.SubElement(
                g,
                "line",
                {
                    "class": "feasible",
                    "x1": _n(flo[0]), "y1": _n(flo[1]), "x2": _n(fhi[0]), "y2": _n(fhi[1]),
                    "stroke": "blue",
                    "stroke-width": _n(float(stroke) * 6),
                },
            )
        elif not report.exact:
            for x in report.samples:
                ET.SubElement(
                    g,
                    "circle",
                    {
                        "class": "approximate",
                        "cx": _n(x[0]), "cy": _n(x[1]), "r": _n(float(stroke) * 4),
                        "stroke": "red",
                    },
                )

    for rx, ry in inst.points:
        ET.SubElement(
            g,
            "circle",
            {"class": "point", "cx": _n(rx), "cy": _n(ry), "r": _n(float(stroke) * 3), "fill": "black"},
        )

    ET.indent(svg)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(svg, encoding="unicode") + "\n"
