import xml.etree.ElementTree as ET

from free_knot_check.bns.brown import BnsVerdict, classify, convex_hull, trace_path
from free_knot_check.bns.svg import SVG_NS, render_svg, write_svg
from free_knot_check.family.templates import generate_knot_word
from free_knot_check.words.expr import ParamBinding


def _count(root, tag: str) -> int:
    return len(list(root.iter(f"{{{SVG_NS}}}{tag}")))


def _render(word):
    path = trace_path(word)
    hull = convex_hull(path)
    return ET.fromstring(render_svg(path, hull, classify(word)))


def test_unit_square_svg():
    root = _render("abAB")
    assert root.tag == f"{{{SVG_NS}}}svg"
    assert _count(root, "polyline") == 1
    assert _count(root, "polygon") == 1
    assert _count(root, "circle") == 4
    assert sorted(t.text for t in root.iter(f"{{{SVG_NS}}}text")) == ["1", "1", "1", "1"]


def test_fig3_svg_has_no_simple_vertex_markers(templates):
    root = _render(generate_knot_word(templates["fig3"], ParamBinding(2, 2, 2)))
    assert _count(root, "circle") == 0
    assert _count(root, "polyline") == 1
    assert "EMPTY" in root.find(f"{{{SVG_NS}}}title").text


def test_svg_with_empty_verdict_lists():
    path = trace_path("abAB")
    hull = convex_hull(path)
    root = ET.fromstring(render_svg(path, hull, BnsVerdict([], [], {}, hull, 4)))
    assert _count(root, "circle") == 0
    assert _count(root, "text") == 0


def test_write_svg(tmp_path):
    out = tmp_path / "square.svg"
    verdict = write_svg("abAB", out)
    assert not verdict.empty
    assert _count(ET.parse(out).getroot(), "polygon") == 1
