import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from circham import (
    Digraph,
    GraphSizeError,
    Method,
    Status,
    circulant,
    disjoint_union,
    find_hamiltonian_cycle,
    held_karp_oracle,
    is_strongly_connected,
    rotational_tournament,
    verify_cycle_witness,
)
from circham.search import enumerate_oriented_sets
from circham.digraph import build_circulant

from conftest import random_digraph


def brute_force_hamiltonian(g):
    n = g.vertex_count
    for rest in itertools.permutations(range(1, n)):
        cycle = (0,) + rest
        if all(g.has_arc(cycle[i], cycle[(i + 1) % n]) for i in range(n)):
            return True
    return False


def complete_digraph(n):
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v])


def test_counterexample_is_non_hamiltonian():
    g = circulant(12, [2, 3, 8])
    v = find_hamiltonian_cycle(g)
    assert v.status is Status.NON_HAMILTONIAN
    assert v.method is Method.BACKTRACKING
    assert v.witness is None
    assert v.nodes_explored >= 1
    assert held_karp_oracle(g).status is Status.NON_HAMILTONIAN


def test_counterexample_node_count_is_stable():
    # regression value for the fixed successor order and pruning rule
    assert find_hamiltonian_cycle(circulant(12, [2, 3, 8])).nodes_explored == 904


def test_directed_cycle():
    v = find_hamiltonian_cycle(circulant(6, [1]))
    assert v.status is Status.HAMILTONIAN
    assert v.witness == (0, 1, 2, 3, 4, 5)
    assert held_karp_oracle(circulant(6, [1])).witness == (0, 1, 2, 3, 4, 5)


def test_disconnected_short_circuits():
    tri = circulant(3, [1])
    v = find_hamiltonian_cycle(disjoint_union(tri, tri))
    assert v.status is Status.NON_HAMILTONIAN
    assert v.method is Method.SHORT_CIRCUIT_SCC
    assert v.nodes_explored == 0


def test_tournament_on_five_vertices():
    g = rotational_tournament(2)
    v = find_hamiltonian_cycle(g)
    assert v.status is Status.HAMILTONIAN
    assert held_karp_oracle(g).status is Status.HAMILTONIAN
    assert brute_force_hamiltonian(g)


def test_complete_digraph_three():
    v = held_karp_oracle(complete_digraph(3))
    assert v.status is Status.HAMILTONIAN
    assert verify_cycle_witness(complete_digraph(3), v.witness)


def test_lexicographically_first_witness():
    g = complete_digraph(5)
    assert find_hamiltonian_cycle(g).witness == (0, 1, 2, 3, 4)
    g = circulant(7, [2, 3])
    first = min(
        (0,) + rest for rest in itertools.permutations(range(1, 7))
        if verify_cycle_witness(g, (0,) + rest)
    )
    assert find_hamiltonian_cycle(g).witness == first


def test_single_vertex():
    v = find_hamiltonian_cycle(Digraph(1))
    assert v.status is Status.NON_HAMILTONIAN and v.nodes_explored >= 1
    assert held_karp_oracle(Digraph(1)).status is Status.NON_HAMILTONIAN


def test_two_vertex_digon():
    g = Digraph(2, [(0, 1), (1, 0)])
    assert find_hamiltonian_cycle(g).witness == (0, 1)
    assert held_karp_oracle(g).witness == (0, 1)


def test_empty_digraph_rejected():
    with pytest.raises(ValueError):
        find_hamiltonian_cycle(Digraph(0))


@pytest.mark.parametrize("n", [0, 25])
def test_oracle_size_guard(n):
    with pytest.raises(GraphSizeError):
        held_karp_oracle(Digraph(n))


def test_oracle_handles_larger_graph():
    g = circulant(20, [1, 3, 7])
    v = held_karp_oracle(g)
    assert v.status is find_hamiltonian_cycle(g).status
    assert v.status is Status.NON_HAMILTONIAN or verify_cycle_witness(g, v.witness)


@pytest.mark.parametrize("witness, expected", [
    ([0, 1, 2, 3, 4], True),
    ([2, 3, 4, 0, 1], True),
    ([0, 2, 4, 1, 3], False),
    ([0, 1, 2, 3], False),
    ([0, 1, 2, 3, 4, 0], False),
    ([0, 1, 1, 3, 4], False),
    ([0, 1, 2, 3, 9], False),
    (["a", 1, 2, 3, 4], False),
    (None, False),
])
def test_verify_cycle_witness(witness, expected):
    assert verify_cycle_witness(circulant(5, [1]), witness) is expected


def test_solvers_match_brute_force_on_small_random_digraphs():
    rng = random.Random(7)
    for _ in range(150):
        g = random_digraph(rng, rng.randint(1, 7), rng.choice([0.2, 0.35, 0.5]))
        expected = brute_force_hamiltonian(g)
        assert find_hamiltonian_cycle(g).is_hamiltonian is expected
        assert held_karp_oracle(g).is_hamiltonian is expected


def test_solvers_match_brute_force_on_small_circulants():
    for n in range(2, 9):
        for k in range(1, n):
            for spec in enumerate_oriented_sets(n, k):
                g = build_circulant(spec)
                expected = brute_force_hamiltonian(g)
                assert find_hamiltonian_cycle(g).is_hamiltonian is expected, spec
                assert held_karp_oracle(g).is_hamiltonian is expected, spec


@st.composite
def digraphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    density = draw(st.sampled_from([0.15, 0.3, 0.5]))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_digraph(random.Random(seed), n, density)


@settings(max_examples=150, deadline=None)
@given(digraphs())
def test_backtracking_agrees_with_oracle(g):
    a, b = find_hamiltonian_cycle(g), held_karp_oracle(g)
    assert a.status is b.status
    if a.is_hamiltonian:
        assert verify_cycle_witness(g, a.witness) and a.witness[0] == 0
        assert verify_cycle_witness(g, b.witness) and b.witness[0] == 0


@settings(max_examples=100, deadline=None)
@given(digraphs(), st.randoms(use_true_random=False))
def test_status_invariant_under_reversal_and_relabeling(g, rnd):
    status = find_hamiltonian_cycle(g).status
    assert find_hamiltonian_cycle(g.reversed()).status is status
    perm = list(range(g.vertex_count))
    rnd.shuffle(perm)
    assert find_hamiltonian_cycle(g.relabeled(perm)).status is status


@settings(max_examples=100, deadline=None)
@given(digraphs())
def test_not_strongly_connected_means_non_hamiltonian(g):
    if not is_strongly_connected(g):
        assert find_hamiltonian_cycle(g).status is Status.NON_HAMILTONIAN
        assert held_karp_oracle(g).status is Status.NON_HAMILTONIAN


@settings(max_examples=50, deadline=None)
@given(digraphs())
def test_solver_is_deterministic(g):
    assert find_hamiltonian_cycle(g) == find_hamiltonian_cycle(g)
    assert held_karp_oracle(g) == held_karp_oracle(g)
