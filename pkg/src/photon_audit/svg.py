"""Deterministic SVG 1.1 rendering of guided-photon flux lines (units of b)."""

from __future__ import annotations

import math

from .waveguide import FluxLine, flux_line_geometry, magnetic_line_geometry

DEFAULT_PHI0 = (-1.1, -0.8, -0.5, -0.2, 0.0, 0.2, 0.5, 0.8, 1.1)
PX_PER_B = 60.0
HALF_WIDTH = 4.0  # view extends to +-4 b


def _fmt(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def _pt(x, y) -> str:
    # SVG y axis points down
    return f"{_fmt(x * PX_PER_B)},{_fmt(-y * PX_PER_B)}"


def _polyline(line: FluxLine, cls: str, n: int = 96) -> str:
    pts = " ".join(_pt(x, y) for x, y in line.polyline(n))
    return f'  <polyline class="{cls}" points="{pts}"/>'


def _semicircle(start_deg: float, cls: str, r: float = 1.0) -> str:
    a0 = math.radians(start_deg)
    a1 = a0 + math.pi
    x0, y0 = r * math.cos(a0), r * math.sin(a0)
    x1, y1 = r * math.cos(a1), r * math.sin(a1)
    rad = _fmt(r * PX_PER_B)
    # sweep-flag 0 draws counterclockwise on screen, i.e. increasing angle in model coordinates
    return (f'  <path class="{cls}" d="M {_pt(x0, y0)} A {rad} {rad} 0 0 0 {_pt(x1, y1)}"/>')


def render_flux_svg(phi0s=None, magnetic: bool | None = None) -> str:
    """SVG of electric (solid) and magnetic (dotted) flux lines.

    With no `phi0s` the default set of electric lines is drawn together with
    magnetic lines at the same angles; an explicit `phi0s` draws only those
    electric lines unless `magnetic` is set.
    """
    explicit = phi0s is not None
    phi0s = tuple(DEFAULT_PHI0 if phi0s is None else phi0s)
    if magnetic is None:
        magnetic = not explicit
    electric = [flux_line_geometry(p) for p in phi0s]
    mag = [magnetic_line_geometry(p) for p in phi0s] if magnetic else []

    size = 2 * HALF_WIDTH * PX_PER_B
    lo = _fmt(-HALF_WIDTH * PX_PER_B)
    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(size)}" '
        f'height="{_fmt(size)}" viewBox="{lo} {lo} {_fmt(size)} {_fmt(size)}">',
        "  <title>Guided photon flux lines</title>",
        "  <desc>" + "; ".join(f"phi0={_fmt(fl.phi0)} junction angle from wall normal="
                               f"{fl.junction_angle_from_normal:.6f} rad" for fl in electric) + "</desc>",
        "  <defs>",
        f'    <clipPath id="view"><rect x="{lo}" y="{lo}" width="{_fmt(size)}" height="{_fmt(size)}"/></clipPath>',
        "  </defs>",
        "  <style>",
        "    .electric { fill: none; stroke: #000000; stroke-width: 1.5; }",
        "    .magnetic { fill: none; stroke: #1f4e9e; stroke-width: 1.2; stroke-dasharray: 2 4; }",
        "    .positive { fill: none; stroke: #c0392b; stroke-width: 4; }",
        "    .negative { fill: none; stroke: #2471a3; stroke-width: 4; }",
        "    .wall { fill: none; stroke: #888888; stroke-width: 0.5; }",
        "  </style>",
        '  <g clip-path="url(#view)">',
        f'  <circle class="wall" cx="0.000" cy="0.000" r="{_fmt(PX_PER_B)}"/>',
        # interior lines run along +x, so they start on the left half
        _semicircle(90.0, "positive"),
        _semicircle(-90.0, "negative"),
    ]
    out += [_polyline(fl, "electric") for fl in electric]
    out += [_polyline(fl, "magnetic") for fl in mag]
    out += ["  </g>", "</svg>", ""]
    return "\n".join(out)
