"""Exhaustive directed Hamiltonicity: backtracking solver, Held-Karp oracle, witness checker."""

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .digraph import Digraph, is_strongly_connected

ORACLE_MAX_VERTICES = 24


class Status(str, enum.Enum):
    HAMILTONIAN = "HAMILTONIAN"
    NON_HAMILTONIAN = "NON_HAMILTONIAN"


class Method(str, enum.Enum):
    BACKTRACKING = "BACKTRACKING"
    HELD_KARP = "HELD_KARP"
    SHORT_CIRCUIT_SCC = "SHORT_CIRCUIT_SCC"


class GraphSizeError(ValueError):
    pass


@dataclass(frozen=True)
class HamVerdict:
    status: Status
    witness: Optional[tuple[int, ...]]
    nodes_explored: int
    method: Method

    @property
    def is_hamiltonian(self) -> bool:
        return self.status is Status.HAMILTONIAN

    def to_dict(self):
        return {
            "status": self.status.value,
            "witness": list(self.witness) if self.witness is not None else None,
            "nodes_explored": self.nodes_explored,
            "method": self.method.value,
        }


def find_hamiltonian_cycle(g: Digraph) -> HamVerdict:
    """Depth-first search for a Hamiltonian circuit starting at vertex 0.

    Successors are tried in ascending order, so a returned witness is the
    lexicographically first circuit. A partial path is abandoned as soon as
    some unvisited vertex has no possible predecessor (among unvisited
    vertices and the path's current end) or no possible successor (among
    unvisited vertices and vertex 0). ``nodes_explored`` counts every call of
    the extension step, pruned or not, the root included.
    """
    n = g.vertex_count
    if n == 0:
        raise ValueError("Hamiltonicity is undefined for the empty digraph")
    if not is_strongly_connected(g):
        return HamVerdict(Status.NON_HAMILTONIAN, None, 0, Method.SHORT_CIRCUIT_SCC)

    out_masks = g.out_masks
    in_masks = g.in_masks
    succ = [g.out_neighbors(v) for v in range(n)]
    full = (1 << n) - 1
    path = [0]
    nodes = 0

    def extend(v, visited):
        nonlocal nodes
        nodes += 1
        if visited == full:
            return out_masks[v] & 1
        unvisited = full & ~visited
        can_enter = unvisited | (1 << v)
        can_leave = unvisited | 1
        rest = unvisited
        while rest:
            low = rest & -rest
            rest ^= low
            u = low.bit_length() - 1
            if not (in_masks[u] & can_enter & ~low) or not (out_masks[u] & can_leave & ~low):
                return False
        for w in succ[v]:
            bit = 1 << w
            if visited & bit:
                continue
            path.append(w)
            if extend(w, visited | bit):
                return True
            path.pop()
        return False

    if extend(0, 1):
        return HamVerdict(Status.HAMILTONIAN, tuple(path), nodes, Method.BACKTRACKING)
    return HamVerdict(Status.NON_HAMILTONIAN, None, nodes, Method.BACKTRACKING)


def held_karp_oracle(g: Digraph) -> HamVerdict:
    """Subset dynamic programme over paths starting at vertex 0.

    Layer ``j`` holds every vertex set of size ``j + 1`` that some path from 0
    covers exactly, paired with the bitmask of vertices such a path can end
    at. The digraph is Hamiltonian iff the final layer has an end with an arc
    back to 0.
    """
    n = g.vertex_count
    if not 1 <= n <= ORACLE_MAX_VERTICES:
        raise GraphSizeError(
            f"Held-Karp oracle supports 1..{ORACLE_MAX_VERTICES} vertices, got {n}")
    preds = g.in_masks

    layers = [(np.array([1], dtype=np.int64), np.array([1], dtype=np.int64))]
    for _ in range(n - 1):
        masks, ends = layers[-1]
        new_masks = []
        new_ends = []
        for w in range(1, n):
            bit = np.int64(1 << w)
            sel = ((masks & bit) == 0) & ((ends & np.int64(preds[w])) != 0)
            count = int(np.count_nonzero(sel))
            if count:
                new_masks.append(masks[sel] | bit)
                new_ends.append(np.full(count, bit, dtype=np.int64))
        if not new_masks:
            return HamVerdict(Status.NON_HAMILTONIAN, None, 0, Method.HELD_KARP)
        cand = np.concatenate(new_masks)
        added = np.concatenate(new_ends)
        uniq, inverse = np.unique(cand, return_inverse=True)
        merged = np.zeros(len(uniq), dtype=np.int64)
        np.bitwise_or.at(merged, inverse, added)
        layers.append((uniq, merged))

    masks, ends = layers[-1]
    closing = ends & np.int64(preds[0])
    if n == 1 or not closing.any():
        return HamVerdict(Status.NON_HAMILTONIAN, None, 0, Method.HELD_KARP)

    # walk back through the layers to recover a circuit
    v = _lowest_bit(int(closing[0]))
    mask = int(masks[0])
    reverse_path = [v]
    for j in range(n - 1, 0, -1):
        mask ^= 1 << v
        prev_masks, prev_ends = layers[j - 1]
        pos = int(np.searchsorted(prev_masks, mask))
        v = _lowest_bit(int(prev_ends[pos]) & preds[v])
        reverse_path.append(v)
    witness = tuple(reversed(reverse_path))
    return HamVerdict(Status.HAMILTONIAN, witness, 0, Method.HELD_KARP)


def _lowest_bit(x: int) -> int:
    return (x & -x).bit_length() - 1


def verify_cycle_witness(g: Digraph, witness: Sequence[int]) -> bool:
    """True iff ``witness`` lists every vertex once and closes into a directed circuit."""
    try:
        cycle = [int(v) for v in witness]
    except (TypeError, ValueError):
        return False
    n = g.vertex_count
    if n == 0 or len(cycle) != n or sorted(cycle) != list(range(n)):
        return False
    return all(g.has_arc(cycle[i], cycle[(i + 1) % n]) for i in range(n))
