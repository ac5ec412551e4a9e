"""Symmetry-reduced search for non-hamiltonian oriented circulants under Jackson's hypotheses."""

import enum
import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Optional

from .digraph import CirculantSpec, build_circulant, set_level_oriented
from .hamiltonicity import (
    ORACLE_MAX_VERTICES,
    HamVerdict,
    Status,
    find_hamiltonian_cycle,
    held_karp_oracle,
)


class BoundMode(str, enum.Enum):
    STRICT_4K_PLUS_1 = "4k+1"
    WEAK_4K = "4k"

    def max_vertices(self, k: int) -> int:
        return 4 * k + 1 if self is BoundMode.STRICT_4K_PLUS_1 else 4 * k


class OracleDisagreement(RuntimeError):
    """Backtracking and Held-Karp returned different statuses."""


@lru_cache(maxsize=None)
def units(n: int) -> tuple[int, ...]:
    """Units of Z_n in ascending order."""
    return tuple(a for a in range(1, n) if math.gcd(a, n) == 1) or (1,)


def multiply_set(n: int, a: int, connection_set: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted((a * s) % n for s in connection_set))


def multiplier_class(n: int, connection_set: Iterable[int]) -> list[tuple[int, ...]]:
    s = tuple(connection_set)
    return sorted({multiply_set(n, a, s) for a in units(n)})


def multiplier_canonical_form(spec: CirculantSpec) -> tuple[int, ...]:
    """Lexicographically least sorted set among the images ``a*S mod n`` over units ``a``."""
    return min(multiply_set(spec.n, a, spec.connection_set) for a in units(spec.n))


def enumerate_connection_sets(n: int, k: int) -> list[CirculantSpec]:
    """All k-subsets of {1..n-1}, oriented or not, in lexicographic order."""
    return [CirculantSpec(n, c) for c in itertools.combinations(range(1, n), k)]


def enumerate_oriented_sets(n: int, k: int) -> list[CirculantSpec]:
    """All oriented k-subsets of {1..n-1} in lexicographic order.

    An oriented set takes at most one element from each inverse pair
    ``{s, n-s}`` and never the self-inverse ``n/2``, so sets are built by
    choosing k pairs and one side of each.
    """
    if n < 2 or k < 1:
        return []
    pairs = [(s, n - s) for s in range(1, (n + 1) // 2) if s != n - s]
    if k > len(pairs):
        return []
    found = []
    for chosen in itertools.combinations(pairs, k):
        for sides in itertools.product((0, 1), repeat=k):
            found.append(tuple(sorted(p[side] for p, side in zip(chosen, sides))))
    found.sort()
    return [CirculantSpec(n, c) for c in found]


def satisfies_jackson_hypotheses(spec: CirculantSpec,
                                 bound_mode: BoundMode = BoundMode.STRICT_4K_PLUS_1) -> bool:
    k = spec.k
    return set_level_oriented(spec) and k != 2 and spec.n <= bound_mode.max_vertices(k)


@dataclass(frozen=True)
class CounterexampleRecord:
    spec: CirculantSpec
    canonical_set: tuple[int, ...]
    k: int
    n: int
    verdict: HamVerdict
    oracle_verdict: HamVerdict

    def to_dict(self):
        return {
            "n": self.n,
            "k": self.k,
            "connection_set": list(self.spec.connection_set),
            "canonical_set": list(self.canonical_set),
            "verdict": self.verdict.to_dict(),
            "oracle_verdict": self.oracle_verdict.to_dict(),
        }


@dataclass(frozen=True)
class LevelStats:
    n: int
    ks: tuple[int, ...]
    instances: int
    classes: int
    counterexamples: int


@dataclass
class SearchReport:
    n_range: tuple[int, int]
    bound_mode: BoundMode
    instances_enumerated: int
    classes_enumerated: int
    counterexamples: list[CounterexampleRecord]
    elapsed: float
    include_k2: bool = False
    allow_digons: bool = False
    per_n: list[LevelStats] = field(default_factory=list)

    def to_dict(self, timing=True):
        d = {
            "n_range": list(self.n_range),
            "bound_mode": self.bound_mode.value,
            "include_k2": self.include_k2,
            "allow_digons": self.allow_digons,
            "instances_enumerated": self.instances_enumerated,
            "classes_enumerated": self.classes_enumerated,
            "per_n": [
                {"n": s.n, "k": list(s.ks), "instances": s.instances,
                 "classes": s.classes, "counterexamples": s.counterexamples}
                for s in self.per_n
            ],
            "counterexamples": [r.to_dict() for r in self.counterexamples],
        }
        if timing:
            d["elapsed_seconds"] = round(self.elapsed, 6)
        return d


def degrees_for(n: int, bound_mode: BoundMode, include_k2=False, allow_digons=False) -> list[int]:
    """Every k for which an n-vertex instance can meet the hypotheses."""
    ks = []
    for k in range(1, n):
        if k == 2 and not include_k2:
            continue
        if not allow_digons and 2 * k + 1 > n:
            continue
        if n <= bound_mode.max_vertices(k):
            ks.append(k)
    return ks


def _solve(spec: CirculantSpec) -> HamVerdict:
    return find_hamiltonian_cycle(build_circulant(spec))


def search_counterexamples(n_min: int, n_max: int,
                           bound_mode: BoundMode = BoundMode.STRICT_4K_PLUS_1,
                           include_k2: bool = False,
                           allow_digons: bool = False,
                           workers: int = 1,
                           progress: Optional[Callable[[LevelStats], None]] = None) -> SearchReport:
    """Decide Hamiltonicity for one representative of every multiplier class.

    ``include_k2`` also scans k = 2 and ``allow_digons`` drops the orientation
    requirement; both leave the vertex bound in force. Every non-hamiltonian
    representative is re-solved with the Held-Karp oracle before it is
    recorded, and a disagreement raises :class:`OracleDisagreement`.
    """
    if not 2 <= n_min <= n_max:
        raise ValueError(f"need 2 <= n_min <= n_max, got {n_min}..{n_max}")
    if n_max > ORACLE_MAX_VERTICES:
        raise ValueError(f"n_max must not exceed {ORACLE_MAX_VERTICES}, got {n_max}")
    bound_mode = BoundMode(bound_mode)
    start = time.perf_counter()

    def admissible(spec):
        if spec.k == 2 and not include_k2:
            return False
        if not allow_digons and not set_level_oriented(spec):
            return False
        return spec.n <= bound_mode.max_vertices(spec.k)

    instances = 0
    records = []
    per_n = []
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for n in range(n_min, n_max + 1):
            ks = degrees_for(n, bound_mode, include_k2, allow_digons)
            reps = []
            level_instances = 0
            for k in ks:
                specs = enumerate_connection_sets(n, k) if allow_digons else enumerate_oriented_sets(n, k)
                level_instances += len(specs)
                reps.extend(s for s in specs
                            if multiplier_canonical_form(s) == s.connection_set and admissible(s))
            if pool is not None:
                verdicts = list(pool.map(_solve, reps, chunksize=max(1, len(reps) // (4 * workers))))
            else:
                verdicts = [_solve(s) for s in reps]
            found = 0
            for spec, verdict in zip(reps, verdicts):
                if verdict.status is not Status.NON_HAMILTONIAN:
                    continue
                oracle = held_karp_oracle(build_circulant(spec))
                if oracle.status is not verdict.status:
                    raise OracleDisagreement(f"{spec}: backtracking {verdict.status.value}, "
                                             f"oracle {oracle.status.value}")
                records.append(CounterexampleRecord(spec, spec.connection_set, spec.k, n,
                                                    verdict, oracle))
                found += 1
            instances += level_instances
            stats = LevelStats(n, tuple(ks), level_instances, len(reps), found)
            per_n.append(stats)
            if progress is not None:
                progress(stats)
    finally:
        if pool is not None:
            pool.shutdown()

    records.sort(key=lambda r: (r.n, r.canonical_set))
    return SearchReport(
        n_range=(n_min, n_max),
        bound_mode=bound_mode,
        instances_enumerated=instances,
        classes_enumerated=sum(s.classes for s in per_n),
        counterexamples=records,
        elapsed=time.perf_counter() - start,
        include_k2=include_k2,
        allow_digons=allow_digons,
        per_n=per_n,
    )
