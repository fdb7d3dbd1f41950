from itertools import product

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st
from scipy.spatial import ConvexHull

from free_knot_check.bns.brown import (
    DegenerateHullError,
    RelatorError,
    classify,
    convex_hull,
    trace_path,
)
from free_knot_check.family.templates import generate_knot_word
from free_knot_check.words.expr import ParamBinding
from free_knot_check.words.free_group import concat, cyclically_reduce, invert, reduce

from conftest import TEMPLATE_NAMES


def test_trace_unit_square():
    path = trace_path("abAB")
    assert path.points.tolist() == [[0, 0], [1, 0], [1, 1], [0, 1], [0, 0]]
    assert path.is_closed()
    assert path.multiplicities() == {(0, 0): 1, (1, 0): 1, (1, 1): 1, (0, 1): 1}


def test_trace_does_not_simplify():
    path = trace_path("aabbAABB")
    assert len(path) == 8
    assert sum(path.multiplicities().values()) == 8
    assert convex_hull(path).vertices == ((0, 0), (2, 0), (2, 2), (0, 2))


@pytest.mark.parametrize("word", ["ab", "aab", "aA", "abA"])
def test_invalid_relators(word):
    with pytest.raises(RelatorError):
        trace_path(word)


def test_empty_relator_has_degenerate_hull():
    with pytest.raises(DegenerateHullError):
        convex_hull(trace_path(""))


def test_unit_square_is_nonempty():
    verdict = classify("abAB")
    assert len(verdict.simple_vertices) == 4
    assert len(verdict.special_edges) == 4
    assert all(e.line_proviso for e in verdict.special_edges)
    assert not verdict.empty


@pytest.mark.parametrize("k", [2, 3])
def test_repeated_loop_has_no_simple_vertex(k):
    verdict = classify("abAB" * k)
    assert verdict.simple_vertices == []
    assert verdict.special_edges == []
    assert verdict.empty
    assert min(verdict.multiplicities.values()) >= k


def test_fig3_corners(templates):
    word = generate_knot_word(templates["fig3"], ParamBinding(2, 2, 2))
    path = trace_path(word)
    hull = convex_hull(path)
    # The path is a 3 x 3 rectangle with loops at the corners
    for corner in [(0, 0), (-3, 0), (-3, 3), (0, 3)]:
        assert corner in path.multiplicities()
        assert hull.contains(corner)
    verdict = classify(word)
    assert verdict.simple_vertices == []
    assert verdict.empty


@pytest.mark.parametrize("name", TEMPLATE_NAMES)
@pytest.mark.parametrize("p, q, n", list(product([2, 3], [2, 3], [2, 3, 4])))
def test_builtin_templates_have_empty_bns(templates, name, p, q, n):
    verdict = classify(generate_knot_word(templates[name], ParamBinding(p, q, n)))
    assert verdict.empty
    assert verdict.simple_vertices == []


@pytest.mark.parametrize("name", TEMPLATE_NAMES)
def test_n_equal_one_is_reported(templates, name):
    verdict = classify(generate_knot_word(templates[name], ParamBinding(2, 2, 1)))
    assert verdict.hull.vertices


@pytest.mark.parametrize("word", ["abAB", "aabbAABB", "abaBAbAB", "aabABBAb"])
def test_hull_matches_qhull(word):
    path = trace_path(word)
    points = np.array(sorted(path.multiplicities()))
    qhull = ConvexHull(points)
    expected = {tuple(int(c) for c in points[i]) for i in qhull.vertices}
    assert set(convex_hull(path).vertices) == expected


@st.composite
def relators(draw):
    u = reduce(draw(st.text(alphabet="abAB", min_size=1, max_size=8)))
    v = reduce(draw(st.text(alphabet="abAB", min_size=1, max_size=8)))
    commutator = concat(concat(u, v), concat(invert(u), invert(v)))
    core, _ = cyclically_reduce(commutator)
    assume(core)
    return core


@settings(max_examples=300, deadline=None)
@given(relators())
def test_path_and_hull_properties(r):
    path = trace_path(r)
    visits = path.multiplicities()
    assert path.is_closed()
    assert sum(visits.values()) == len(r)
    hull = convex_hull(path)
    assert set(hull.vertices) <= set(visits)
    assert all(hull.contains(p) for p in visits)
    verdict = classify(r)
    assert verdict.empty == (
        not verdict.simple_vertices and not any(e.line_proviso for e in verdict.special_edges)
    )
    for e in verdict.special_edges:
        assert e.start in verdict.simple_vertices and e.end in verdict.simple_vertices


@settings(max_examples=100, deadline=None)
@given(relators(), st.integers(0, 100))
def test_emptiness_is_rotation_invariant(r, k):
    assert classify(r).empty == classify(r.rotate(k)).empty
