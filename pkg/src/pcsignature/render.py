"""SVG graph of an element on the unit square."""

from __future__ import annotations

from .elements import PwMap

SIZE = 400
MARGIN = 20

PREAMBLE = """\
<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{w}" viewBox="0 0 {w} {w}">
<rect x="{m}" y="{m}" width="{s}" height="{s}" fill="none" stroke="#999999" stroke-width="1"/>
"""


def _xy(x, y):
    # y axis points up in the plot.
    return MARGIN + float(x) * SIZE, MARGIN + (1 - float(y)) * SIZE


def render_svg(h: PwMap) -> str:
    """One ``<line>`` per affine piece, one filled ``<circle>`` per breakpoint value."""
    out = [PREAMBLE.format(w=SIZE + 2 * MARGIN, m=MARGIN, s=SIZE)]
    for p in h.pieces:
        a, b = p.source.left, p.source.right
        x1, y1 = _xy(a, p(a))
        x2, y2 = _xy(b, p(b))
        out.append(
            f'<line class="piece" x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}" '
            'stroke="#1f4e99" stroke-width="2"/>\n'
        )
    for x, y in zip(h.lefts, h.points):
        cx, cy = _xy(x, y)
        out.append(f'<circle class="breakpoint" cx="{cx:.3f}" cy="{cy:.3f}" r="3" fill="#c0392b"/>\n')
    out.append("</svg>\n")
    return "".join(out)
