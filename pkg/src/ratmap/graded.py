"""Graded dimension vectors and free graded-commutative algebras.

Only dimensions are tracked.  A free graded-commutative algebra over Q is
polynomial on its even generators and exterior on its odd ones, so its
Hilbert series is determined by the list of generator degrees.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .powerseries import (
    SeriesError,
    TruncatedSeries,
    exterior_factor,
    geometric_factor,
    series_mul,
    series_pow,
)


@dataclass(frozen=True)
class GradedDims:
    """Finitely supported ``degree -> dimension`` map; zero entries are dropped."""

    dims: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for deg, dim in dict(self.dims).items():
            if deg < 0:
                raise ValueError(f"negative degree {deg}")
            if dim < 0:
                raise ValueError(f"negative dimension {dim} in degree {deg}")
            if dim:
                clean[deg] = dim
        object.__setattr__(self, "dims", dict(sorted(clean.items())))

    def __getitem__(self, degree: int) -> int:
        return self.dims.get(degree, 0)

    def __eq__(self, other):
        if not isinstance(other, GradedDims):
            return NotImplemented
        return self.dims == other.dims

    def __hash__(self):
        return hash(tuple(self.dims.items()))

    @property
    def total(self) -> int:
        return sum(self.dims.values())


def shift(v: GradedDims, j: int) -> GradedDims:
    """``V[j]_k = V_{k+j}``: move every class down ``j`` degrees.

    Classes that would land in negative degree are discarded.
    """
    if j < 0:
        raise ValueError("only downward shifts are supported")
    return GradedDims({k - j: d for k, d in v.dims.items() if k - j >= 0})


@dataclass(frozen=True)
class Generator:
    """A block of ``multiplicity`` free generators in one degree.

    Parity is a function of the degree.  Even generators carry the integer
    Tate twist ``degree // 2``; odd generators only appear in conjectural
    presentations and have ``twist = None``.
    """

    degree: int
    multiplicity: int = 1
    twist: int | None = None

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError(f"negative generator degree {self.degree}")
        if self.multiplicity < 0:
            raise ValueError(f"negative multiplicity {self.multiplicity}")
        if self.degree % 2 == 0:
            expected = self.degree // 2
            if self.twist is None:
                object.__setattr__(self, "twist", expected)
            elif self.twist != expected:
                raise ValueError(
                    f"even generator of degree {self.degree} must have twist {expected}, "
                    f"got {self.twist}"
                )
        elif self.twist is not None:
            raise ValueError(f"odd generator of degree {self.degree} cannot carry a Tate twist")

    @property
    def parity(self) -> str:
        return "even" if self.degree % 2 == 0 else "odd"

    @property
    def weight(self) -> Fraction:
        """Hodge weight of the class; half its degree."""
        return Fraction(self.degree, 2)


@dataclass(frozen=True)
class GeneratorSet:
    """Generators of a free graded-commutative algebra.

    ``conjectural`` records that the presentation was produced outside the
    proven (even-cell) regime; it propagates through :func:`tensor`.
    """

    generators: tuple[Generator, ...] = ()
    conjectural: bool = False

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    @property
    def has_odd(self) -> bool:
        return any(g.degree % 2 and g.multiplicity for g in self.generators)

    def degree_counts(self) -> Counter:
        """Total multiplicity per degree."""
        c = Counter()
        for g in self.generators:
            c[g.degree] += g.multiplicity
        return +c

    def collected(self) -> GeneratorSet:
        """Merge blocks of equal degree; order by degree."""
        counts = self.degree_counts()
        return GeneratorSet(
            tuple(Generator(deg, counts[deg]) for deg in sorted(counts)),
            self.conjectural,
        )

    @classmethod
    def free_on(cls, v: GradedDims, conjectural: bool = False) -> GeneratorSet:
        """Generators for Sym/Lambda of ``v``: one block per nonzero degree."""
        return cls(tuple(Generator(deg, dim) for deg, dim in v.dims.items()), conjectural)


def tensor(a: GeneratorSet, b: GeneratorSet) -> GeneratorSet:
    """Tensor product of free algebras: free on the union of the generators."""
    return GeneratorSet(a.generators + b.generators, a.conjectural or b.conjectural)


def free_gca_hilbert(gs: GeneratorSet | Iterable[Generator], cutoff: int) -> TruncatedSeries:
    """Hilbert series of the free graded-commutative algebra on ``gs``."""
    result = TruncatedSeries.one(cutoff)
    for g in gs:
        if g.multiplicity == 0:
            continue
        if g.degree == 0:
            raise SeriesError("degree-0 generators have no Hilbert series")
        if g.degree % 2 == 0:
            factor = series_pow(geometric_factor(g.degree, cutoff), g.multiplicity)
        else:
            factor = exterior_factor(g.degree, g.multiplicity, cutoff)
        result = series_mul(result, factor)
    return result
