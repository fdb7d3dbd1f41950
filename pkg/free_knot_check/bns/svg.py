import sys
import xml.etree.ElementTree as ET

from free_knot_check.bns.brown import BnsVerdict, HullPolygon, LatticePath, classify, convex_hull, trace_path


SVG_NS = "http://www.w3.org/2000/svg"
STYLE = {
    "scale": 20,
    "margin": 2,
    "path_color": "#1f77b4",
    "hull_color": "#7f7f7f",
    "simple_color": "#d62728",
}

ET.register_namespace("", SVG_NS)


def _tag(name: str) -> str:
    return f"{{{SVG_NS}}}{name}"


def render_svg(path: LatticePath, hull: HullPolygon, verdict: BnsVerdict, style: dict = STYLE) -> str:
    """Draw a traced relator, its hull, the simple vertices and the hull-vertex multiplicities.

    Args:
        path (LatticePath): The traced relator.
        hull (HullPolygon): Its convex hull.
        verdict (BnsVerdict): The classification of the relator.
        style (dict, optional): Scale, margin and colors. Defaults to STYLE.

    Returns:
        str: An SVG document.
    """
    scale, margin = style["scale"], style["margin"]
    xs = [int(x) for x in path.points[:, 0]]
    ys = [int(y) for y in path.points[:, 1]]
    x0, y1 = min(xs) - margin, max(ys) + margin
    width = (max(xs) - min(xs) + 2 * margin) * scale
    height = (max(ys) - min(ys) + 2 * margin) * scale

    def xy(point) -> tuple[int, int]:
        # SVG y grows downwards
        return (int(point[0]) - x0) * scale, (y1 - int(point[1])) * scale

    def coords(points) -> str:
        return " ".join("{},{}".format(*xy(p)) for p in points)

    root = ET.Element(
        _tag("svg"),
        {"width": str(width), "height": str(height), "viewBox": f"0 0 {width} {height}"},
    )
    ET.SubElement(root, _tag("title")).text = f"{path.word} ({'EMPTY' if verdict.empty else 'NONEMPTY'})"
    ET.SubElement(
        root,
        _tag("polygon"),
        {"points": coords(hull.vertices), "fill": "none", "stroke": style["hull_color"], "stroke-dasharray": "4 2"},
    )
    ET.SubElement(
        root,
        _tag("polyline"),
        {"points": coords(path.points), "fill": "none", "stroke": style["path_color"], "stroke-width": "2"},
    )
    for vertex in verdict.simple_vertices:
        x, y = xy(vertex)
        ET.SubElement(
            root,
            _tag("circle"),
            {"class": "simple-vertex", "cx": str(x), "cy": str(y), "r": str(scale // 4), "fill": style["simple_color"]},
        )
    for vertex, count in verdict.multiplicities.items():
        x, y = xy(vertex)
        label = ET.SubElement(
            root, _tag("text"), {"class": "multiplicity", "x": str(x + scale // 4), "y": str(y - scale // 4)}
        )
        label.text = str(count)
    return ET.tostring(root, encoding="unicode")


def write_svg(r: str, svg_path: str) -> BnsVerdict:
    path = trace_path(r)
    verdict = classify(path.word)
    with open(svg_path, "w") as f:
        f.write(render_svg(path, convex_hull(path), verdict))
    return verdict


if __name__ == "__main__":
    verdict = write_svg(sys.argv[1], sys.argv[2])
    print(f"Wrote {sys.argv[2]}: {'EMPTY' if verdict.empty else 'NONEMPTY'}")
