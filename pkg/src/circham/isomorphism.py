"""Multiplier equivalence and backtracking isomorphism for small circulant digraphs."""

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .digraph import CirculantSpec, Digraph, circulant, digon_count
from .search import multiplier_canonical_form, multiply_set, units

ISO_MAX_VERTICES = 16


@dataclass(frozen=True)
class AdamPair:
    """Isomorphic circulants on Z_n whose connection sets are not multiplier-equivalent."""

    n: int
    set_a: tuple[int, ...]
    set_b: tuple[int, ...]
    mapping: tuple[int, ...]

    def to_dict(self):
        return {"n": self.n, "set_a": list(self.set_a), "set_b": list(self.set_b),
                "mapping": list(self.mapping)}


def are_multiplier_equivalent(n: int, set_a: Iterable[int], set_b: Iterable[int]) -> Optional[int]:
    """Smallest unit ``a`` of Z_n with ``a*set_a = set_b``, or None."""
    a_set = tuple(set_a)
    target = tuple(sorted(s % n for s in set_b))
    for a in units(n):
        if multiply_set(n, a, a_set) == target:
            return a
    return None


def degree_profile(g: Digraph) -> list[tuple[int, int]]:
    return sorted((g.in_degree(v), g.out_degree(v)) for v in range(g.vertex_count))


def verify_isomorphism(g1: Digraph, g2: Digraph, mapping: Sequence[int]) -> bool:
    """Arc-by-arc check that ``v -> mapping[v]`` carries g1 exactly onto g2."""
    n = g1.vertex_count
    if n != g2.vertex_count or len(mapping) != n or sorted(mapping) != list(range(n)):
        return False
    image = {(mapping[u], mapping[v]) for u, v in g1.arcs()}
    return image == set(g2.arcs())


def _search_order(g: Digraph) -> list[int]:
    # breadth-first over the underlying undirected graph, so each vertex after
    # a component root already has a mapped neighbour
    n = g.vertex_count
    seen = [False] * n
    order = []
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(set(g.out_neighbors(v)) | set(g.in_neighbors(v))):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def are_isomorphic(g1: Digraph, g2: Digraph) -> Optional[tuple[int, ...]]:
    """Find a vertex bijection mapping the arcs of g1 exactly onto those of g2.

    Vertices of g1 are assigned in breadth-first order; candidates in g2 are
    tried in ascending order and must match in/out-degree and be consistent,
    in both directions, with every assignment made so far.
    """
    n = g1.vertex_count
    if n > ISO_MAX_VERTICES or g2.vertex_count > ISO_MAX_VERTICES:
        raise ValueError(f"isomorphism search supports at most {ISO_MAX_VERTICES} vertices")
    if n != g2.vertex_count or g1.arc_count != g2.arc_count:
        return None
    if degree_profile(g1) != degree_profile(g2) or digon_count(g1) != digon_count(g2):
        return None

    order = _search_order(g1)
    deg2 = [(g2.in_degree(v), g2.out_degree(v)) for v in range(n)]
    candidates = {
        v: [w for w in range(n) if deg2[w] == (g1.in_degree(v), g1.out_degree(v))]
        for v in range(n)
    }
    mapping = [-1] * n
    used = [False] * n

    def consistent(v, w, placed):
        for u in placed:
            x = mapping[u]
            if g1.has_arc(v, u) != g2.has_arc(w, x) or g1.has_arc(u, v) != g2.has_arc(x, w):
                return False
        return True

    def assign(depth):
        if depth == n:
            return True
        v = order[depth]
        placed = order[:depth]
        for w in candidates[v]:
            if used[w] or not consistent(v, w, placed):
                continue
            mapping[v] = w
            used[w] = True
            if assign(depth + 1):
                return True
            used[w] = False
            mapping[v] = -1
        return False

    if assign(0):
        return tuple(mapping)
    return None


def find_adam_pairs(n: int, k: int, anchor: Optional[Iterable[int]] = None) -> list[AdamPair]:
    """All isomorphic pairs of circulants on Z_n with k generators lying in distinct multiplier classes.

    One pair is reported per pair of classes, using each class's canonical
    representative; with ``anchor`` given only pairs against the anchor's
    class are tested and the anchor itself is reported as ``set_a``.
    """
    if n > ISO_MAX_VERTICES:
        raise ValueError(f"Adam pair search supports n <= {ISO_MAX_VERTICES}, got {n}")
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    classes = sorted({multiplier_canonical_form(CirculantSpec(n, c))
                      for c in _k_subsets(n, k)})
    graphs = {c: circulant(n, c) for c in classes}

    if anchor is not None:
        anchor_spec = CirculantSpec(n, anchor)
        if anchor_spec.k != k:
            raise ValueError(f"anchor {anchor_spec.connection_set} does not have {k} elements")
        anchor_class = multiplier_canonical_form(anchor_spec)
        anchor_graph = circulant(n, anchor_spec.connection_set)
        tasks = [(anchor_spec.connection_set, anchor_graph, c)
                 for c in classes if c != anchor_class]
    else:
        tasks = [(a, graphs[a], b) for i, a in enumerate(classes) for b in classes[i + 1:]]

    pairs = []
    for set_a, graph_a, set_b in tasks:
        mapping = are_isomorphic(graph_a, graphs[set_b])
        if mapping is not None:
            pairs.append(AdamPair(n, set_a, set_b, mapping))
    return pairs


def _k_subsets(n, k):
    from itertools import combinations
    return combinations(range(1, n), k)
