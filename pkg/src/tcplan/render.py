"""Static SVG rendering of planar scenarios.

Output depends only on the input numbers, so identical scenarios give
identical bytes.
"""

import numpy as np

_SIZE = 600


def _f(x: float) -> str:
    return f"{x:.6f}"


def render_svg(points: np.ndarray, start, goal, *, annulus=None, unit_circle=False,
               star=None) -> str:
    """SVG of a sampled planar path plus the scene it lives in.

    For the annulus: the obstacle disk, the clearance circle ``l_O + l_R``,
    the retraction circle ``rho`` and the robot footprint at the start.
    """
    points = np.asarray(points, float)
    extent = float(np.max(np.abs(points)))
    if annulus is not None:
        extent = max(extent, annulus.rho)
    if unit_circle:
        extent = max(extent, 1.0)
    if star is not None and star.outline is not None:
        kind, p, q = star.outline
        far = np.abs(p) + q if kind == "disk" else np.maximum(np.abs(p), np.abs(q))
        extent = max(extent, float(np.max(far)))
    half = 1.2 * extent
    w = half / 250.0

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" '
        f'viewBox="{_f(-half)} {_f(-half)} {_f(2 * half)} {_f(2 * half)}">',
        f'<rect x="{_f(-half)}" y="{_f(-half)}" width="{_f(2 * half)}" height="{_f(2 * half)}" '
        'fill="white"/>',
        '<g transform="scale(1,-1)">',
    ]
    if annulus is not None:
        c = annulus.clearance
        out += [
            f'<circle id="obstacle" cx="0" cy="0" r="{_f(annulus.l_O)}" fill="#888888"/>',
            f'<circle id="clearance" cx="0" cy="0" r="{_f(c)}" fill="none" stroke="#cc3333" '
            f'stroke-width="{_f(w)}" stroke-dasharray="{_f(4 * w)} {_f(3 * w)}"/>',
            f'<circle id="retraction" cx="0" cy="0" r="{_f(annulus.rho)}" fill="none" '
            f'stroke="#3366cc" stroke-width="{_f(w)}" stroke-dasharray="{_f(w)} {_f(3 * w)}"/>',
            f'<circle id="robot" cx="{_f(start[0])}" cy="{_f(start[1])}" r="{_f(annulus.l_R)}" '
            'fill="#33aa33" fill-opacity="0.3"/>',
        ]
    if unit_circle:
        out.append(f'<circle id="sphere" cx="0" cy="0" r="1.000000" fill="none" '
                   f'stroke="#3366cc" stroke-width="{_f(w)}"/>')
    if star is not None and star.outline is not None:
        out.append(_star_outline(star, w))
    pts = " ".join(f"{_f(x)},{_f(y)}" for x, y in points)
    out.append(f'<polyline id="path" points="{pts}" fill="none" stroke="black" '
               f'stroke-width="{_f(1.5 * w)}"/>')
    m = 4 * w
    for name, p, color in (("start", start, "#33aa33"), ("goal", goal, "#cc3333")):
        out.append(f'<rect id="{name}" x="{_f(p[0] - m)}" y="{_f(p[1] - m)}" width="{_f(2 * m)}" '
                   f'height="{_f(2 * m)}" fill="{color}"/>')
    out += ["</g>", "</svg>", ""]
    return "\n".join(out)


def _star_outline(star, w) -> str:
    kind, p, q = star.outline
    if kind == "disk":
        return (f'<ellipse id="domain" cx="{_f(p[0])}" cy="{_f(p[1])}" rx="{_f(q)}" ry="{_f(q)}" '
                f'fill="none" stroke="#3366cc" stroke-width="{_f(w)}"/>')
    return (f'<rect id="domain" x="{_f(p[0])}" y="{_f(p[1])}" width="{_f(q[0] - p[0])}" '
            f'height="{_f(q[1] - p[1])}" fill="none" stroke="#3366cc" stroke-width="{_f(w)}"/>')
