import itertools
from collections import deque

import pytest
from hypothesis import given, strategies as st

from circham import (
    CirculantSpec,
    Digraph,
    build_circulant,
    circulant,
    digon_count,
    disjoint_union,
    is_k_diregular,
    is_oriented,
    is_strongly_connected,
    rotational_tournament,
    set_level_oriented,
    strongly_connected_components,
)


@st.composite
def specs(draw, max_n=16):
    n = draw(st.integers(2, max_n))
    s = draw(st.sets(st.integers(1, n - 1), max_size=n - 1))
    return CirculantSpec(n, s)


@st.composite
def digraphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    arcs = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return Digraph(n, arcs)


def reachable(g, src):
    seen = {src}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        for w in g.out_neighbors(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def strongly_connected_by_reachability(g):
    return all(len(reachable(g, v)) == g.vertex_count for v in range(g.vertex_count))


def test_counterexample_circulant_arcs():
    g = circulant(12, [2, 3, 8])
    assert g.vertex_count == 12
    assert g.arc_count == 36
    for arc in [(0, 2), (0, 3), (0, 8), (1, 3), (1, 4), (1, 9)]:
        assert g.has_arc(*arc)
    assert g.out_neighbors(11) == (1, 2, 7)


def test_single_step_circulant_is_directed_cycle():
    assert circulant(5, [1]).arcs() == [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]


def test_half_step_forces_digon():
    g = circulant(4, [1, 2])
    assert g.has_arc(0, 2) and g.has_arc(2, 0)


@pytest.mark.parametrize("n, s", [(1, []), (0, [1]), (5, [0]), (5, [5]), (5, [-1]), (5, [1, 1])])
def test_invalid_specs_rejected(n, s):
    with pytest.raises(ValueError):
        CirculantSpec(n, s)


def test_spec_normalizes_order():
    assert CirculantSpec(12, [8, 2, 3]).connection_set == (2, 3, 8)
    assert CirculantSpec(12, {8, 3, 2}) == CirculantSpec(12, (2, 3, 8))


@pytest.mark.parametrize("arcs", [[(0, 0)], [(0, 3)], [(0, 1), (0, 1)]])
def test_invalid_digraphs_rejected(arcs):
    with pytest.raises(ValueError):
        Digraph(3, arcs)


def test_diregularity():
    assert is_k_diregular(circulant(12, [2, 3, 8]), 3)
    assert is_k_diregular(circulant(5, [1]), 1)
    assert not is_k_diregular(Digraph(3, [(0, 1)]), 1)
    assert not is_k_diregular(circulant(12, [2, 3, 8]), 2)


def test_orientation():
    assert is_oriented(circulant(12, [2, 3, 8]))
    assert not is_oriented(circulant(4, [1, 2]))
    assert not is_oriented(Digraph(2, [(0, 1), (1, 0)]))
    assert digon_count(Digraph(3, [(0, 1), (1, 0), (1, 2), (2, 1), (2, 0)])) == 2


def negated_intersection(n, s):
    return set(s) & {(-x) % n for x in s}


@pytest.mark.parametrize("n, s, expected", [
    (12, [2, 3, 8], True),
    (4, [1, 2], False),
    (5, [1, 2], True),
])
def test_set_level_orientation(n, s, expected):
    assert (not negated_intersection(n, s)) == expected
    assert set_level_oriented(CirculantSpec(n, s)) is expected


def test_strong_connectivity():
    assert is_strongly_connected(circulant(12, [2, 3, 8]))
    assert not is_strongly_connected(circulant(6, [2, 4]))
    triangles = Digraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert not is_strongly_connected(triangles)
    assert is_strongly_connected(Digraph(0))
    assert is_strongly_connected(Digraph(1))


def test_scc_components():
    g = Digraph(5, [(0, 1), (1, 0), (1, 2), (2, 3), (3, 2), (4, 3)])
    assert sorted(strongly_connected_components(g)) == [[0, 1], [2, 3], [4]]


@pytest.mark.parametrize("k, n", [(1, 3), (2, 5), (3, 7), (4, 9)])
def test_rotational_tournament(k, n):
    g = rotational_tournament(k)
    assert g.vertex_count == n
    assert g.arc_count == n * k
    assert is_k_diregular(g, k) and is_oriented(g)
    for u, v in itertools.combinations(range(n), 2):
        assert g.has_arc(u, v) + g.has_arc(v, u) == 1


def test_rotational_tournament_rejects_zero():
    with pytest.raises(ValueError):
        rotational_tournament(0)


def test_disjoint_union():
    tri = circulant(3, [1])
    u = disjoint_union(tri, tri)
    assert u.vertex_count == 6 and u.arc_count == 6
    assert not is_strongly_connected(u)
    c5 = circulant(5, [1])
    assert disjoint_union(Digraph(0), c5) == c5
    assert disjoint_union(c5, Digraph(0)) == c5
    t = disjoint_union(rotational_tournament(3), rotational_tournament(3))
    assert t.vertex_count == 14 and is_k_diregular(t, 3)


def test_reverse_and_relabel():
    g = Digraph(3, [(0, 1), (1, 2)])
    assert g.reversed().arcs() == [(1, 0), (2, 1)]
    assert g.relabeled([2, 0, 1]).arcs() == [(0, 1), (2, 0)]
    with pytest.raises(ValueError):
        g.relabeled([0, 0, 1])


@given(specs())
def test_circulants_are_diregular(spec):
    assert is_k_diregular(build_circulant(spec), spec.k)


@given(specs())
def test_set_level_orientation_matches_digraph(spec):
    assert set_level_oriented(spec) == is_oriented(build_circulant(spec))


@given(specs())
def test_build_is_deterministic(spec):
    assert build_circulant(spec) == build_circulant(CirculantSpec(spec.n, reversed(spec.connection_set)))


@given(digraphs())
def test_self_union_never_strongly_connected(g):
    if g.vertex_count >= 1:
        assert not is_strongly_connected(disjoint_union(g, g))


@given(digraphs())
def test_tarjan_matches_reachability(g):
    assert is_strongly_connected(g) == strongly_connected_by_reachability(g)
    comps = strongly_connected_components(g)
    assert sorted(v for c in comps for v in c) == list(range(g.vertex_count))
    for c in comps:
        for v in c:
            assert set(c) <= reachable(g, v)
