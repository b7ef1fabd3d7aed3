"""Exhaustive and randomized soundness sweeps for frieze mutation.

The main check: for every triangulation and every flippable diagonal, the
entrywise-mutated frieze equals the frieze rebuilt from scratch on the
flipped triangulation.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .frieze import frieze_from_cc, frieze_from_quiddity, validate_frieze
from .mutation import mutate_frieze
from .polygon import Triangulation, all_triangulations, random_triangulation
from .quiver import mutate_quiver, quiver_of


@dataclass
class SweepResult:
    triangulations: int = 0
    mutations: int = 0
    seconds: float = 0.0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "SweepResult") -> None:
        self.triangulations += other.triangulations
        self.mutations += other.mutations
        self.seconds += other.seconds
        self.failures.extend(other.failures)


def check_triangulation(t: Triangulation, quivers: bool = True) -> SweepResult:
    """All single mutations of one triangulation against the direct route."""
    res = SweepResult(triangulations=1)
    start = time.perf_counter()
    f = frieze_from_cc(t)
    if frieze_from_quiddity(t.quiddity()).entries != f.entries:
        res.failures.append(f"route disagreement for {t.diagonals}")
    q = quiver_of(t)
    for a in sorted(t.diagonals):
        res.mutations += 1
        mutated, flipped = mutate_frieze(f, t, a)
        direct = frieze_from_cc(flipped)
        if mutated.entries != direct.entries:
            bad = [d for d in direct.entries if direct.entries[d] != mutated.entries[d]]
            res.failures.append(
                f"delta mismatch at {sorted(map(str, bad))} flipping {a} "
                f"in {sorted(map(str, t.diagonals))}"
            )
        if not validate_frieze(mutated).ok:
            res.failures.append(f"mutated frieze invalid flipping {a}")
        if quivers:
            _, new_diag = t.flip(a)
            expected = quiver_of(flipped).relabel({new_diag: a})
            if mutate_quiver(q, a) != expected:
                res.failures.append(f"quiver mutation mismatch at {a}")
    res.seconds = time.perf_counter() - start
    return res


def sweep(n_min: int = 5, n_max: int = 9, quivers: bool = True,
          progress=None) -> SweepResult:
    """Exhaustive soundness sweep over all triangulations, n_min..n_max."""
    total = SweepResult()
    for n in range(n_min, n_max + 1):
        for t in all_triangulations(n):
            total.merge(check_triangulation(t, quivers=quivers))
        if progress is not None:
            progress(n, total)
    return total


def random_sweep(sizes, samples: int, seed: int) -> SweepResult:
    """Randomized soundness checks for larger polygons."""
    rng = random.Random(seed)
    total = SweepResult()
    for n in sizes:
        for _ in range(samples):
            t = random_triangulation(n, rng)
            total.merge(check_triangulation(t, quivers=False))
    return total
