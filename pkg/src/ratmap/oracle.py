"""Brute-force monomial counting for free graded-commutative algebras.

Independent of :mod:`ratmap.powerseries`: no closed forms, only knapsack
updates on plain integer lists.  Used to check every series formula.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CountTable:
    counts: tuple[int, ...]

    def __post_init__(self):
        if not self.counts or self.counts[0] != 1:
            raise ValueError("a count table starts with a single empty monomial")

    @property
    def cutoff(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, degree):
        return self.counts[degree]

    def __iter__(self):
        return iter(self.counts)


def _variables(generators):
    # one (degree, is_odd) entry per individual variable
    for g in generators:
        deg, mult = g.degree, g.multiplicity
        if mult and deg == 0:
            raise ValueError("degree-0 generator: infinitely many monomials in degree 0")
        if deg < 0:
            raise ValueError(f"negative generator degree {deg}")
        for _ in range(mult):
            yield deg, deg % 2 == 1


def count_monomials(generators, cutoff: int) -> CountTable:
    """``counts[k]`` = number of monomials of total degree ``k``.

    Even variables may appear to any power; odd variables at most once.
    ``generators`` is any iterable of objects with ``degree`` and
    ``multiplicity`` attributes.
    """
    if cutoff < 0:
        raise ValueError("cutoff must be non-negative")
    counts = [0] * (cutoff + 1)
    counts[0] = 1
    for deg, odd in _variables(generators):
        if odd:
            # 0/1 knapsack: walk downwards so each variable is used once
            for k in range(cutoff, deg - 1, -1):
                counts[k] += counts[k - deg]
        else:
            # unbounded knapsack: walk upwards so the variable can repeat
            for k in range(deg, cutoff + 1):
                counts[k] += counts[k - deg]
    return CountTable(tuple(counts))
