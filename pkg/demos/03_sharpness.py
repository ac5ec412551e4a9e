"""
Why 4k+1 cannot be raised
=========================

Two disjoint k-diregular tournaments on 2k+1 vertices give a k-diregular
oriented graph on 4k+2 vertices with no Hamiltonian circuit.
"""

from circham import (
    disjoint_union,
    find_hamiltonian_cycle,
    is_k_diregular,
    is_oriented,
    rotational_tournament,
)

for k in (1, 3, 4):
    T = rotational_tournament(k)
    G = disjoint_union(T, T)
    v = find_hamiltonian_cycle(G)
    print(f"k={k}: {G.vertex_count} vertices, diregular={is_k_diregular(G, k)}, "
          f"oriented={is_oriented(G)}, {v.status.value} ({v.method.value})")
    # each tournament on its own is Hamiltonian
    print("   single tournament:", find_hamiltonian_cycle(T).witness)
