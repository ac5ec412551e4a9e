"""
The 12-vertex counterexample
============================

Build Cay(Z_12; {2, 3, 8}), check it meets every hypothesis of Jackson's
conjecture and show that neither solver finds a Hamiltonian circuit.
"""

from circham import (
    BoundMode,
    CirculantSpec,
    build_circulant,
    find_hamiltonian_cycle,
    held_karp_oracle,
    is_k_diregular,
    is_oriented,
    is_strongly_connected,
    satisfies_jackson_hypotheses,
)
from circham.export import to_dot

spec = CirculantSpec(12, [2, 3, 8])
H = build_circulant(spec)
print(spec, "-", H.arc_count, "arcs")
print("out-neighbours of 0:", H.out_neighbors(0))

# structural hypotheses
print("3-diregular:", is_k_diregular(H, 3))
print("oriented:", is_oriented(H))
print("strongly connected:", is_strongly_connected(H))
print("n <= 4k+1:", satisfies_jackson_hypotheses(spec, BoundMode.STRICT_4K_PLUS_1))
print("n <= 4k:  ", satisfies_jackson_hypotheses(spec, BoundMode.WEAK_4K))

# the conclusion fails, by two independent methods
bt = find_hamiltonian_cycle(H)
hk = held_karp_oracle(H)
print(f"backtracking: {bt.status.value} after {bt.nodes_explored} nodes")
print(f"Held-Karp:    {hk.status.value}")

# Graphviz source; render with `dot -Tpng`
print(to_dot(H))
