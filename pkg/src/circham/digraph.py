"""Digraphs, circulant specifications and the structural predicates on them."""

from dataclasses import dataclass
from typing import Iterable, Sequence


class Digraph:
    """Immutable simple digraph on vertices ``0 .. vertex_count - 1``.

    Keeps sorted out/in-neighbour lists for iteration, a frozenset of arcs for
    membership tests and per-vertex bitmasks for the solvers.
    """

    __slots__ = ("_n", "_arcs", "_out", "_in", "_out_masks", "_in_masks")

    def __init__(self, vertex_count: int, arcs: Iterable[tuple[int, int]] = ()):
        if vertex_count < 0:
            raise ValueError(f"vertex_count must be non-negative, got {vertex_count}")
        arc_list = [(int(u), int(v)) for u, v in arcs]
        arc_set = frozenset(arc_list)
        if len(arc_set) != len(arc_list):
            raise ValueError("duplicate arcs")
        out = [[] for _ in range(vertex_count)]
        inn = [[] for _ in range(vertex_count)]
        for u, v in arc_set:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"arc ({u}, {v}) out of range for {vertex_count} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            out[u].append(v)
            inn[v].append(u)
        self._n = vertex_count
        self._arcs = arc_set
        self._out = tuple(tuple(sorted(a)) for a in out)
        self._in = tuple(tuple(sorted(a)) for a in inn)
        self._out_masks = tuple(_mask(a) for a in self._out)
        self._in_masks = tuple(_mask(a) for a in self._in)

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def arc_count(self) -> int:
        return len(self._arcs)

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs sorted by (tail, head)."""
        return sorted(self._arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self._arcs

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        return len(self._in[v])

    @property
    def out_masks(self) -> tuple[int, ...]:
        return self._out_masks

    @property
    def in_masks(self) -> tuple[int, ...]:
        return self._in_masks

    def reversed(self) -> "Digraph":
        return Digraph(self._n, ((v, u) for u, v in self._arcs))

    def relabeled(self, perm: Sequence[int]) -> "Digraph":
        """Image of this digraph under ``v -> perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            raise ValueError("perm is not a permutation of the vertices")
        return Digraph(self._n, ((perm[u], perm[v]) for u, v in self._arcs))

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._n == other._n and self._arcs == other._arcs

    def __hash__(self):
        return hash((self._n, self._arcs))

    def __repr__(self):
        return f"Digraph({self._n}, {self.arcs()!r})"


def _mask(vertices):
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class CirculantSpec:
    """Cay(Z_n; S): modulus ``n`` and connection set ``S``, stored sorted."""

    n: int
    connection_set: tuple[int, ...]

    def __init__(self, n: int, connection_set: Iterable[int]):
        elements = [int(s) for s in connection_set]
        if n < 2:
            raise ValueError(f"circulant modulus must be at least 2, got {n}")
        if len(set(elements)) != len(elements):
            raise ValueError(f"repeated element in connection set {elements}")
        for s in elements:
            if not 1 <= s <= n - 1:
                raise ValueError(f"connection element {s} outside [1, {n - 1}]")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "connection_set", tuple(sorted(elements)))

    @property
    def k(self) -> int:
        return len(self.connection_set)

    def __str__(self):
        return f"Cay(Z_{self.n}; {{{', '.join(map(str, self.connection_set))}}})"


def build_circulant(spec: CirculantSpec) -> Digraph:
    n = spec.n
    return Digraph(n, ((i, (i + s) % n) for i in range(n) for s in spec.connection_set))


def circulant(n: int, connection_set: Iterable[int]) -> Digraph:
    """Shorthand for ``build_circulant(CirculantSpec(n, connection_set))``."""
    return build_circulant(CirculantSpec(n, connection_set))


def is_k_diregular(g: Digraph, k: int) -> bool:
    return all(g.out_degree(v) == k and g.in_degree(v) == k for v in range(g.vertex_count))


def is_oriented(g: Digraph) -> bool:
    return not any(g.has_arc(v, u) for u, v in g.arcs())


def digon_count(g: Digraph) -> int:
    """Number of unordered pairs joined in both directions."""
    return sum(1 for u, v in g.arcs() if u < v and g.has_arc(v, u))


def set_level_oriented(spec: CirculantSpec) -> bool:
    s = set(spec.connection_set)
    return s.isdisjoint((spec.n - x) % spec.n for x in s)


def strongly_connected_components(g: Digraph) -> list[list[int]]:
    """Tarjan's algorithm, iterative. Components come out in reverse topological order."""
    n = g.vertex_count
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack = []
    components = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            succ = g.out_neighbors(v)
            recurse = False
            while i < len(succ):
                w = succ[i]
                i += 1
                if index[w] == -1:
                    work.append((v, i))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                components.append(sorted(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return components


def is_strongly_connected(g: Digraph) -> bool:
    # empty digraph counts as strongly connected
    return len(strongly_connected_components(g)) <= 1


def rotational_tournament(k: int) -> Digraph:
    """Cay(Z_{2k+1}; {1..k}), a k-diregular tournament."""
    if k < 1:
        raise ValueError(f"tournament degree must be positive, got {k}")
    return circulant(2 * k + 1, range(1, k + 1))


def disjoint_union(a: Digraph, b: Digraph) -> Digraph:
    off = a.vertex_count
    arcs = a.arcs() + [(u + off, v + off) for u, v in b.arcs()]
    return Digraph(off + b.vertex_count, arcs)
