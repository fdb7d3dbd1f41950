"""
Brown's criterion for the BNS invariant of a two-generator one-relator group.

The relator is traced, letter by letter and without simplification, as a closed path in
Z^2. A vertex of the path's convex hull is simple if the path visits it exactly once; a
horizontal or vertical hull edge is special if both of its endpoints are simple. The BNS
invariant is empty iff there is no simple vertex and no special edge whose supporting
line meets the hull only in that edge.
"""
import sys
from dataclasses import dataclass

import numpy as np

from free_knot_check.words.free_group import CyclicWord, WordError, as_cyclic, exponent_sums


STEPS = {"a": (1, 0), "A": (-1, 0), "b": (0, 1), "B": (0, -1)}


class RelatorError(ValueError):
    pass


class DegenerateHullError(ValueError):
    pass


Point = tuple[int, int]


@dataclass(frozen=True, eq=False)
class LatticePath:
    """Points s_0 ... s_L of a traced relator, as an (L + 1, 2) integer array."""

    word: CyclicWord
    points: np.ndarray

    def __len__(self) -> int:
        return len(self.points) - 1

    def multiplicities(self) -> dict[Point, int]:
        """Visit count of each point over the cyclic index set [0, L); s_L is not counted again."""
        visited = self.points[:-1] if len(self.points) > 1 else self.points
        distinct, counts = np.unique(visited, axis=0, return_counts=True)
        return {(int(x), int(y)): int(c) for (x, y), c in zip(distinct, counts)}

    def is_closed(self) -> bool:
        return bool(np.array_equal(self.points[0], self.points[-1]))


@dataclass(frozen=True)
class HullPolygon:
    vertices: tuple[Point, ...]

    @property
    def edges(self) -> list[tuple[Point, Point]]:
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def contains(self, point: Point) -> bool:
        """True for points inside or on the boundary."""
        return all(_cross(u, v, point) >= 0 for u, v in self.edges)


@dataclass(frozen=True)
class SpecialEdge:
    start: Point
    end: Point
    line_proviso: bool


@dataclass(frozen=True)
class BnsVerdict:
    simple_vertices: list[Point]
    special_edges: list[SpecialEdge]
    multiplicities: dict[Point, int]
    hull: HullPolygon
    word_length: int = 0

    @property
    def empty(self) -> bool:
        return not self.simple_vertices and not any(e.line_proviso for e in self.special_edges)


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _as_relator(r: "CyclicWord | str") -> CyclicWord:
    try:
        r = as_cyclic(r)
    except WordError as e:
        raise RelatorError(f"Relator must be cyclically reduced: {e}") from e
    sums = exponent_sums(r)
    if sums != (0, 0):
        raise RelatorError(f"Relator {r} has exponent sums {sums}; the method needs trivial abelianization.")
    return r


def trace_path(r: "CyclicWord | str") -> LatticePath:
    """Trace a relator as a closed path from the origin.

    Args:
        r (CyclicWord | str): A cyclically reduced word with exponent sums (0, 0).

    Returns:
        LatticePath: The traced path.
    """
    r = _as_relator(r)
    steps = np.array([STEPS[x] for x in r.letters], dtype=np.int64).reshape(-1, 2)
    points = np.vstack([np.zeros((1, 2), dtype=np.int64), np.cumsum(steps, axis=0)])
    return LatticePath(r, points)


def convex_hull(path: LatticePath) -> HullPolygon:
    """Exact convex hull of the visited points (monotone chain).

    Args:
        path (LatticePath): A traced relator.

    Returns:
        HullPolygon: Strictly convex vertex list, counterclockwise from the lexicographically
            least vertex.
    """
    points = sorted(path.multiplicities())
    if len(points) < 3:
        raise DegenerateHullError(f"Path of {path.word} visits fewer than 3 points.")

    def half(pts):
        chain = []
        for p in pts:
            while len(chain) >= 2 and _cross(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(points)
    upper = half(reversed(points))
    vertices = lower[:-1] + upper[:-1]
    if len(vertices) < 3:
        raise DegenerateHullError(f"Path of {path.word} is collinear.")
    return HullPolygon(tuple(vertices))


def _line_proviso(edge: tuple[Point, Point], hull: HullPolygon, visited: list[Point]) -> bool:
    # The supporting line may meet the hull point set only in the edge's segment
    u, v = edge
    lo, hi = 0, (v[0] - u[0]) ** 2 + (v[1] - u[1]) ** 2
    for p in list(hull.vertices) + visited:
        if _cross(u, v, p) != 0:
            continue
        t = (p[0] - u[0]) * (v[0] - u[0]) + (p[1] - u[1]) * (v[1] - u[1])
        if not lo <= t <= hi:
            return False
    return True


def classify(r: "CyclicWord | str") -> BnsVerdict:
    """Decide whether the BNS invariant of <a, b | r> is empty.

    Args:
        r (CyclicWord | str): A cyclically reduced relator with exponent sums (0, 0).

    Returns:
        BnsVerdict: Simple hull vertices, special edges and hull-vertex multiplicities.
    """
    path = trace_path(r)
    hull = convex_hull(path)
    visits = path.multiplicities()
    multiplicities = {v: visits[v] for v in hull.vertices}
    simple = [v for v in hull.vertices if multiplicities[v] == 1]

    special = []
    for u, v in hull.edges:
        if (u[0] == v[0] or u[1] == v[1]) and u in simple and v in simple:
            special.append(SpecialEdge(u, v, _line_proviso((u, v), hull, list(visits))))
    return BnsVerdict(simple, special, multiplicities, hull, len(path))


if __name__ == "__main__":
    verdict = classify(sys.argv[1])
    print(f"hull: {list(verdict.hull.vertices)}")
    print(f"simple vertices: {verdict.simple_vertices}")
    print(f"special edges: {[(e.start, e.end) for e in verdict.special_edges]}")
    print("EMPTY" if verdict.empty else "NONEMPTY")
