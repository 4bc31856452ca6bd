"""SVG rendering of instances, shortest paths, mirror layers, and paths.

Rendering is presentation only: all geometric decisions happen upstream on
exact rationals.  Coordinates are emitted as fixed decimals with 20
significant digits so output bytes are reproducible.
"""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction

from .geom import Point, point_between
from .instances import Instance
from .mirrors import MirrorSystem
from .paths import ReflectionPath
from .region import Frame

# color per mirror layer, cycled
_PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


def _dec(q: Fraction) -> str:
    with localcontext() as ctx:
        ctx.prec = 20
        d = Decimal(q.numerator) / Decimal(q.denominator)
    return format(d, "f")


def _xy(p: Point) -> str:
    return f"{_dec(p.x)},{_dec(p.y)}"


def _polyline(points, **attrs) -> str:
    parts = " ".join(_xy(p) for p in points)
    a = " ".join(f'{k.replace("_", "-")}="{v}"' for k, v in attrs.items())
    return f'<polyline points="{parts}" fill="none" {a}/>'


def _line(a: Point, b: Point, **attrs) -> str:
    at = " ".join(f'{k.replace("_", "-")}="{v}"' for k, v in attrs.items())
    return (f'<line x1="{_dec(a.x)}" y1="{_dec(a.y)}" '
            f'x2="{_dec(b.x)}" y2="{_dec(b.y)}" {at}/>')


def _dot(p: Point, r: str, fill: str) -> str:
    return f'<circle cx="{_dec(p.x)}" cy="{_dec(p.y)}" r="{r}" fill="{fill}"/>'


def render_svg(inst: Instance,
               frame: Frame | None = None,
               system: MirrorSystem | None = None,
               path: ReflectionPath | None = None) -> str:
    P = inst.polygon
    xs = [v.x for v in P.vertices]
    ys = [v.y for v in P.vertices]
    lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    margin = max(hi_x - lo_x, hi_y - lo_y, Fraction(1)) / 20
    vb = (lo_x - margin, lo_y - margin,
          (hi_x - lo_x) + 2 * margin, (hi_y - lo_y) + 2 * margin)
    stroke_w = _dec(max(hi_x - lo_x, hi_y - lo_y, Fraction(1)) / 300)
    wide_w = _dec(max(hi_x - lo_x, hi_y - lo_y, Fraction(1)) / 110)
    dot_r = _dec(max(hi_x - lo_x, hi_y - lo_y, Fraction(1)) / 90)

    out = []
    out.append('<?xml version="1.0" encoding="UTF-8"?>')
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_dec(vb[0])} {_dec(vb[1])} {_dec(vb[2])} {_dec(vb[3])}" '
        f'width="720" height="720" preserveAspectRatio="xMidYMid meet">'
    )
    # y grows upward in the model; flip once here
    flip = _dec(lo_y + hi_y)
    out.append(f'<g transform="matrix(1 0 0 -1 0 {flip})">')

    ring = " ".join(_xy(v) for v in P.vertices)
    out.append(f'<polygon points="{ring}" fill="#f7f6f2" '
               f'stroke="#30302e" stroke-width="{stroke_w}" '
               f'stroke-linejoin="round"/>')

    if system is not None:
        for li, layer in enumerate(system.layers):
            color = _PALETTE[li % len(_PALETTE)]
            body = []
            for m in layer:
                ea, eb = P.edge(m.edge)
                for iv in m.fset.intervals():
                    a = point_between(ea, eb, iv.lo)
                    b = a if iv.degenerate else point_between(ea, eb, iv.hi)
                    body.append(_line(a, b, stroke=color, stroke_width=wide_w,
                                      stroke_linecap="round"))
            out.append(f'<g id="layer-{li + 1}" data-mirrors="{len(layer)}">')
            out.extend(body)
            out.append('</g>')

    if frame is not None and len(frame.sp) >= 2:
        out.append(_polyline(frame.sp, stroke="#777777",
                             stroke_width=stroke_w,
                             stroke_dasharray=f"{stroke_w} {stroke_w}"))
        for g in frame.gates:
            out.append(_line(g.near, g.far, stroke="#d62728",
                             stroke_width=wide_w, stroke_linecap="round"))

    if path is not None and len(path.points) >= 2:
        out.append(_polyline(path.points, stroke="#1046c8",
                             stroke_width=wide_w, stroke_linecap="round",
                             stroke_linejoin="round"))
        for z in path.points[1:-1]:
            out.append(_dot(z, dot_r, "#1046c8"))

    out.append(_dot(inst.source, dot_r, "#0a7d32"))
    out.append(_dot(inst.target, dot_r, "#b01616"))
    out.append('</g>')
    out.append('</svg>')
    return "\n".join(out) + "\n"
