"""Directed Hamiltonicity of circulant digraphs and a search for counterexamples
to Jackson's conjecture on diregular oriented graphs."""

__version__ = "0.1.0"

from .digraph import (
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
from .hamiltonicity import (
    GraphSizeError,
    HamVerdict,
    Method,
    Status,
    find_hamiltonian_cycle,
    held_karp_oracle,
    verify_cycle_witness,
)
from .search import (
    BoundMode,
    CounterexampleRecord,
    SearchReport,
    enumerate_oriented_sets,
    multiplier_canonical_form,
    satisfies_jackson_hypotheses,
    search_counterexamples,
)
from .isomorphism import (
    AdamPair,
    are_isomorphic,
    are_multiplier_equivalent,
    find_adam_pairs,
    verify_isomorphism,
)
