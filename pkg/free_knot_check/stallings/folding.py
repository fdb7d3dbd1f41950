"""
Folded subgroup graphs (Stallings graphs) for subgroups of the free group F(a, b).

A graph is an `nx.MultiDiGraph` whose edges are keyed by their label, "a" or "b". An edge
u -> v keyed "a" is read as a from u and as A from v.
"""
import sys
from dataclasses import dataclass

import networkx as nx

from free_knot_check.words.free_group import Word, cyclically_reduce, letter_runs, reduce


LABELS = ("a", "b")


@dataclass(frozen=True, eq=False)
class SubgroupGraph:
    graph: nx.MultiDiGraph
    base: int = 0

    @property
    def vertex_count(self) -> int:
        return self.graph.number_of_nodes()

    @property
    def edge_count(self) -> int:
        return self.graph.number_of_edges()

    def rank(self) -> int:
        return self.edge_count - self.vertex_count + 1


def _step(graph: nx.MultiDiGraph, v, x: str):
    """Vertex reached by reading letter x from v, or None."""
    label = x.lower()
    if x == label:
        edges = [w for _, w, k in graph.out_edges(v, keys=True) if k == label]
    else:
        edges = [u for u, _, k in graph.in_edges(v, keys=True) if k == label]
    return edges[0] if edges else None


def _read(graph: nx.MultiDiGraph, v, text: str):
    for x in text:
        v = _step(graph, v, x)
        if v is None:
            return None
    return v


def _merge(graph: nx.MultiDiGraph, keep, drop) -> None:
    # Edges with the same endpoints and label collapse because the label is the edge key
    for u, _, k in list(graph.in_edges(drop, keys=True)):
        graph.add_edge(keep if u == drop else u, keep, key=k)
    for _, w, k in list(graph.out_edges(drop, keys=True)):
        graph.add_edge(keep, keep if w == drop else w, key=k)
    graph.remove_node(drop)


def _find_fold(graph: nx.MultiDiGraph):
    for v in graph.nodes:
        for label in LABELS:
            targets = [w for _, w, k in graph.out_edges(v, keys=True) if k == label]
            if len(targets) > 1:
                return targets[0], targets[1]
            sources = [u for u, _, k in graph.in_edges(v, keys=True) if k == label]
            if len(sources) > 1:
                return sources[0], sources[1]
    return None


def build_core(generators: list, base: int = 0) -> SubgroupGraph:
    """Fold the wedge of generator loops.

    Args:
        generators (list): Words (Word or str, freely reduced on the way in). An empty list
            gives the trivial subgroup.
        base (int, optional): Name of the base vertex. Defaults to 0.

    Returns:
        SubgroupGraph: The folded graph.
    """
    graph = nx.MultiDiGraph()
    graph.add_node(base)
    fresh = base + 1
    for g in generators:
        text = reduce(str(g)).letters
        if not text:
            continue
        u = base
        for i, x in enumerate(text):
            if i == len(text) - 1:
                v = base
            else:
                v = fresh
                fresh += 1
            if x.islower():
                graph.add_edge(u, v, key=x)
            else:
                graph.add_edge(v, u, key=x.lower())
            u = v

    fold = _find_fold(graph)
    while fold is not None:
        u, v = fold
        keep, drop = (v, u) if u != base and (v == base or v < u) else (u, v)
        _merge(graph, keep, drop)
        fold = _find_fold(graph)
    return SubgroupGraph(graph, base)


def canonical_form(g: SubgroupGraph) -> tuple[int, tuple[tuple[int, str, int], ...]]:
    """Vertex count and sorted edge list after breadth-first relabeling from the base.

    Neighbors are visited in the order a-out, a-in, b-out, b-in, so two folded graphs are
    isomorphic as based labeled graphs iff their canonical forms are equal.
    """
    order = {g.base: 0}
    queue = [g.base]
    while queue:
        v = queue.pop(0)
        for x in ("a", "A", "b", "B"):
            w = _step(g.graph, v, x)
            if w is not None and w not in order:
                order[w] = len(order)
                queue.append(w)
    edges = sorted((order[u], k, order[w]) for u, w, k in g.graph.edges(keys=True))
    return len(order), tuple(edges)


def is_member(g: SubgroupGraph, w: "Word | str") -> bool:
    """True iff w labels a closed path at the base vertex."""
    return _read(g.graph, g.base, reduce(str(w)).letters) == g.base


def cyclic_core(g: SubgroupGraph) -> nx.MultiDiGraph:
    """Prune vertices of degree at most 1, the base included, until none remain."""
    core = g.graph.copy()
    leaves = [v for v in core.nodes if core.degree(v) <= 1]
    while leaves:
        core.remove_nodes_from(leaves)
        leaves = [v for v in core.nodes if core.degree(v) <= 1]
    return core


def is_conjugate_into(g: SubgroupGraph, w: "Word | str") -> bool:
    """True iff w is conjugate into the subgroup of g.

    The cyclic reduction of w must label a closed path somewhere in the cyclic core of g.
    """
    core_word, _ = cyclically_reduce(reduce(str(w)))
    if not core_word:
        return True
    core = cyclic_core(g)
    return any(_read(core, v, core_word.letters) == v for v in core.nodes)


def isolated_letters(w: "Word | str") -> list[str]:
    """Letters occurring, cyclically, in a run of length exactly 1."""
    core, _ = cyclically_reduce(reduce(str(w)))
    letters = {x for x, k in letter_runs(core, cyclic=True) if k == 1}
    return [x for x in ("a", "b", "A", "B") if x in letters]


if __name__ == "__main__":
    g = build_core(sys.argv[2:])
    print(f"{g.vertex_count} vertices, {g.edge_count} edges, rank {g.rank()}")
    print(f"member: {is_member(g, sys.argv[1])}")
    print(f"conjugate into: {is_conjugate_into(g, sys.argv[1])}")
