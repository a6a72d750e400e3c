"""SVG rendering of the tiles B_n and their images under short words in g1, g2."""

from __future__ import annotations

import xml.etree.ElementTree as ET

from .derived import eval_free
from .halfplane import ExtReal, domain_B, mobius_apply, mobius_boundary
from .words import reduced_free_words

SVG_NS = "http://www.w3.org/2000/svg"

CUSP_HEIGHT = 2.5   # vertical sides are cut off here
SCALE = 100.0       # pixels per unit


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def _geodesic_cmd(p: complex, q: complex) -> str:
    """Path command drawing the hyperbolic geodesic from p to q (both finite)."""
    if abs(p.real - q.real) < 1e-12:
        return f"L {_fmt(q.real)} {_fmt(q.imag)}"
    centre = (abs(p) ** 2 - abs(q) ** 2) / (2 * (p.real - q.real))
    r = abs(p - centre)
    # user space has y pointing up; left-to-right over the top is clockwise
    sweep = 0 if p.real < q.real else 1
    return f"A {_fmt(r)} {_fmt(r)} 0 0 {sweep} {_fmt(q.real)} {_fmt(q.imag)}"


def tile_path_data(vertices) -> str:
    """Path data for a geodesic polygon.

    ``vertices`` is cyclic; entries are complex numbers in the closed upper
    half-plane or ``None`` for the point at infinity, whose two sides are
    drawn as verticals cut at ``CUSP_HEIGHT``.
    """
    k = next(i for i, v in enumerate(vertices) if v is not None)
    vs = vertices[k:] + vertices[:k]
    cmds = [f"M {_fmt(vs[0].real)} {_fmt(vs[0].imag)}"]
    n = len(vs)
    for i in range(n):
        p, q = vs[i], vs[(i + 1) % n]
        if p is None:
            continue
        if q is None:
            r = vs[(i + 2) % n]
            cmds.append(f"L {_fmt(p.real)} {_fmt(CUSP_HEIGHT)}")
            cmds.append(f"L {_fmt(r.real)} {_fmt(CUSP_HEIGHT)}")
            cmds.append(f"L {_fmt(r.real)} {_fmt(r.imag)}")
        else:
            cmds.append(_geodesic_cmd(p, q))
    cmds.append("Z")
    return " ".join(cmds)


def _image_vertices(m, tile):
    out = []
    for v in tile.vertices:
        if isinstance(v, ExtReal):
            img = mobius_boundary(m, v)
            out.append(None if img.infinite else complex(img.value, 0.0))
        else:
            out.append(mobius_apply(m, v).z)
    return out


def emit_tiling_svg(range_n: tuple[int, int], depth: int, path) -> int:
    """Write the tiles B_n, n in ``range_n`` (inclusive), to ``path``.

    With ``depth > 0`` each tile is also drawn under every reduced word in
    g1, g2 of length 1..depth.  ``path`` is a filename or a writable binary
    or text stream.  Returns the number of tile paths written.
    """
    lo, hi = range_n
    ns = list(range(lo, hi + 1))
    words = [w for w in reduced_free_words(depth) if not w.is_identity()] if depth > 0 else []

    x0 = (min(ns) if ns else 0) - 1.5
    x1 = (max(ns) if ns else 0) + 1.5
    width, height = (x1 - x0) * SCALE, CUSP_HEIGHT * SCALE

    ET.register_namespace("", SVG_NS)
    svg = ET.Element(f"{{{SVG_NS}}}svg", {
        "width": _fmt(width), "height": _fmt(height),
        "viewBox": f"0 0 {_fmt(width)} {_fmt(height)}",
    })
    # upper half-plane (x, y) -> viewport (SCALE (x - x0), SCALE (CUSP_HEIGHT - y))
    g = ET.SubElement(svg, f"{{{SVG_NS}}}g", {
        "id": "halfplane",
        "transform": f"matrix({_fmt(SCALE)} 0 0 {_fmt(-SCALE)} {_fmt(-x0 * SCALE)} {_fmt(height)})",
        "fill": "none", "stroke": "black", "stroke-width": "0.01",
    })
    ET.SubElement(g, f"{{{SVG_NS}}}line", {
        "class": "axis", "x1": _fmt(x0), "y1": "0", "x2": _fmt(x1), "y2": "0"})

    count = 0
    for n in ns:
        tile = domain_B(n)
        base = [None if isinstance(v, ExtReal) else v.z for v in tile.vertices]
        ET.SubElement(g, f"{{{SVG_NS}}}path", {
            "id": f"B{n}", "class": "tile", "d": tile_path_data(base)})
        count += 1
        for j, w in enumerate(words):
            verts = _image_vertices(eval_free(w), tile)
            ET.SubElement(g, f"{{{SVG_NS}}}path", {
                "id": f"B{n}_w{j}", "class": "tile image", "data-word": str(w),
                "stroke": "steelblue", "d": tile_path_data(verts)})
            count += 1
            cusp = verts[0]
            if cusp is not None:
                ET.SubElement(g, f"{{{SVG_NS}}}circle", {
                    "class": "cusp", "cx": _fmt(cusp.real), "cy": "0", "r": "0.02"})

    tree = ET.ElementTree(svg)
    if hasattr(path, "write"):
        text = ET.tostring(svg, encoding="unicode", xml_declaration=True)
        try:
            path.write(text)
        except TypeError:
            path.write(text.encode("utf-8"))
    else:
        tree.write(path, encoding="utf-8", xml_declaration=True)
    return count

