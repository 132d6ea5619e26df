"""Rational invariants of the mapping space ``Map(X, BG)``.

Rationally ``BG`` is a product of ``K(Z, 2n_i)`` over the invariant degrees
``n_i`` of ``G``, and ``Map(X, K(A, n))`` splits as a product of
``K(H^q(X; A), n - q)``.  Everything here is read off that splitting:
the Eilenberg-MacLane factors, Poincare series, rational homotopy ranks,
free presentations of the cohomology of a component, and the weights of
that cohomology.

Factors ``K(Z^d, 0)`` are discrete.  They only multiply the set of
components, so they are reported separately and never enter a series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graded import Generator, GeneratorSet, free_gca_hilbert
from .powerseries import (
    TruncatedSeries,
    exterior_factor,
    geometric_factor,
    series_mul,
    series_pow,
)
from .space import SpaceModel
from .weyl import GroupSpec


class EvenCellHypothesisError(ValueError):
    """The proven cohomology presentation was requested for a space not
    known to have only even-dimensional cells."""


class InternalInvariantError(RuntimeError):
    pass


THEOREM_HYPOTHESIS = (
    "X must be a connected CW-complex with no cell of odd dimension "
    "whose even-dimensional skeleta are connected"
)


@dataclass(frozen=True)
class EMFactor:
    """``K(Z^rank, degree)`` coming from ``H^q(X)`` and invariant degree ``n``."""

    rank: int
    degree: int
    q: int
    n: int

    def __post_init__(self):
        if self.degree != 2 * self.n - self.q or self.degree < 0:
            raise InternalInvariantError(f"inconsistent factor {self}")
        if self.rank < 1:
            raise InternalInvariantError(f"factor with rank {self.rank}")

    @property
    def origin(self) -> tuple[int, int]:
        return (self.q, self.n)

    def __str__(self) -> str:
        coeff = "Z" if self.rank == 1 else f"Z^{self.rank}"
        return f"K({coeff},{self.degree})"


@dataclass(frozen=True)
class EMFactorization:
    positive_factors: tuple[EMFactor, ...]
    degree_zero_factors: tuple[EMFactor, ...] = ()

    def __iter__(self):
        return iter(self.positive_factors)


def thom_factorization(x: SpaceModel, g: GroupSpec) -> EMFactorization:
    """Eilenberg-MacLane factors of ``Map(X, BG)`` up to rational equivalence.

    One factor per ``(q, n_i)`` with ``b_q > 0`` and ``2 n_i - q >= 0``,
    ordered by ``q`` and then by the order of ``g.degrees``.
    """
    positive, zero = [], []
    for q, bq in enumerate(x.betti):
        if bq == 0:
            continue
        for n in g.degrees:
            m = 2 * n - q
            if m > 0:
                positive.append(EMFactor(bq, m, q, n))
            elif m == 0:
                zero.append(EMFactor(bq, 0, q, n))
    return EMFactorization(tuple(positive), tuple(zero))


def _factor_series(degree: int, rank: int, cutoff: int) -> TruncatedSeries:
    if degree % 2 == 0:
        return series_pow(geometric_factor(degree, cutoff), rank)
    return exterior_factor(degree, rank, cutoff)


def poincare_series(x: SpaceModel, g: GroupSpec, cutoff: int) -> TruncatedSeries:
    """Poincare series of one component of ``Map(X, BG)`` through ``t^cutoff``."""
    result = TruncatedSeries.one(cutoff)
    for f in thom_factorization(x, g).positive_factors:
        result = series_mul(result, _factor_series(f.degree, f.rank, cutoff))
    return result


def lemma_hypersurface_series(k: int, d: int, g: GroupSpec, cutoff: int) -> TruncatedSeries:
    """Closed-form Poincare series for ``X`` a smooth hypersurface in
    ``P^(k+1)`` with middle Betti number ``d``.

    Even ``k = 2m``::

        prod_i (1 - t^(2n_i - 2m))^(-d) * prod_{0 <= q <= k, q != m} (1 - t^(2n_i - 2q))^(-1)

    Odd ``k``::

        prod_i (1 + t^(2n_i - k))^d * prod_{0 <= q <= k} (1 - t^(2n_i - 2q))^(-1)

    The range of ``q`` covers every even cohomological degree ``2q`` of X
    outside the middle, both below it and (by duality) above it.  Factors
    whose exponent is not positive are dropped.
    """
    if k < 1:
        raise ValueError(f"hypersurface dimension must be >= 1, got {k}")
    if d < 0 or (k % 2 == 0 and d < 1):
        raise ValueError(f"invalid middle Betti number {d} for k = {k}")
    result = TruncatedSeries.one(cutoff)

    def times(s):
        nonlocal result
        result = series_mul(result, s)

    for n in g.degrees:
        if k % 2 == 0:
            m = k // 2
            if 2 * n - 2 * m > 0:
                times(series_pow(geometric_factor(2 * n - 2 * m, cutoff), d))
            outer = [q for q in range(k + 1) if q != m]
        else:
            if 2 * n - k > 0:
                times(exterior_factor(2 * n - k, d, cutoff))
            outer = list(range(k + 1))
        for q in outer:
            if 2 * n - 2 * q > 0:
                times(geometric_factor(2 * n - 2 * q, cutoff))
    return result


def homotopy_ranks(x: SpaceModel, g: GroupSpec, k: int) -> int:
    """Rank of ``pi_k(Map(X, BG)) (x) Q``, i.e. the sum over ``n_i`` of
    ``b_{2 n_i - k}(X)``."""
    if k < 1:
        raise ValueError(f"homotopy degree must be >= 1, got {k}")
    return sum(x.b(2 * n - k) for n in g.degrees)


def component_cohomology(
    x: SpaceModel,
    g: GroupSpec,
    conjectural: bool = False,
    assume_even_cells: bool = False,
) -> GeneratorSet:
    """Free graded-commutative presentation of ``H^*`` of a component.

    Proven regime (``conjectural=False``): X must have only even cells.
    Each even Betti number ``b_{2j}`` contributes ``b_{2j}`` copies of
    ``Sym V[2j]``, including ``j = 0`` (the ``BG`` factor itself).  With
    ``conjectural=True`` the odd Betti numbers add copies of
    ``Lambda V[2j-1]`` as well.
    """
    if not conjectural:
        if not (x.even_cells_only or assume_even_cells):
            raise EvenCellHypothesisError(
                f"{x.label}: no even-cell structure is guaranteed; "
                f"the proven presentation requires that {THEOREM_HYPOTHESIS}. "
                "Pass assume_even_cells or use the conjectural mode."
            )
        if not x.odd_betti_vanish:
            raise EvenCellHypothesisError(
                f"{x.label} has odd cohomology, so it cannot satisfy: {THEOREM_HYPOTHESIS}"
            )
    gens = []
    for q, bq in enumerate(x.betti):
        if bq == 0 or (q % 2 and not conjectural):
            continue
        for n in g.degrees:
            if 2 * n - q > 0:
                gens.append(Generator(2 * n - q, bq))
    return GeneratorSet(tuple(gens), conjectural)


@dataclass(frozen=True)
class HodgeTateRow:
    degree: int
    weight: Fraction
    dimension: int


@dataclass(frozen=True)
class HodgeTateTable:
    rows: tuple[HodgeTateRow, ...]
    conjectural: bool = False

    def __post_init__(self):
        for r in self.rows:
            if r.weight != Fraction(r.degree, 2):
                raise InternalInvariantError(f"row {r} has weight != degree/2")
            if r.degree % 2 and not self.conjectural:
                raise InternalInvariantError(
                    f"odd-degree row {r.degree} in a table not marked conjectural"
                )

    def __iter__(self):
        return iter(self.rows)


def hodge_tate_table(gs: GeneratorSet, cutoff: int) -> HodgeTateTable:
    """Degrees, weights and dimensions of the free algebra on ``gs``.

    Each even generator is pure of type ``(k, k)`` in degree ``2k``, so
    every monomial has weight half its degree and only dimensions need
    counting.
    """
    series = free_gca_hilbert(gs, cutoff)
    rows = tuple(
        HodgeTateRow(deg, Fraction(deg, 2), dim) for deg, dim in enumerate(series) if dim
    )
    return HodgeTateTable(rows, gs.conjectural or gs.has_odd)
