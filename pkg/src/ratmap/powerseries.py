"""Exact truncated power series in one variable ``t``.

Coefficients are Python ints, so products never lose precision.  Every
binary operation insists on matching cutoffs instead of silently
truncating the longer operand.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable


class SeriesError(ValueError):
    """Raised for cutoff mismatches and out-of-domain factor requests."""


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients ``c_0 .. c_N`` of a series known modulo ``t^(N+1)``."""

    coeffs: tuple[int, ...]
    cutoff: int

    def __post_init__(self):
        if self.cutoff < 0:
            raise SeriesError(f"cutoff must be non-negative, got {self.cutoff}")
        if len(self.coeffs) != self.cutoff + 1:
            raise SeriesError(
                f"expected {self.cutoff + 1} coefficients, got {len(self.coeffs)}"
            )
        for c in self.coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise SeriesError(f"coefficients must be integers, got {c!r}")

    @classmethod
    def from_terms(cls, terms: dict[int, int] | Iterable[int], cutoff: int) -> TruncatedSeries:
        """Build from a degree->coefficient map or a dense list; excess terms are dropped."""
        coeffs = [0] * (cutoff + 1)
        items = terms.items() if isinstance(terms, dict) else enumerate(terms)
        for deg, c in items:
            if deg < 0:
                raise SeriesError(f"negative degree {deg}")
            if deg <= cutoff:
                coeffs[deg] += c
        return cls(tuple(coeffs), cutoff)

    @classmethod
    def one(cls, cutoff: int) -> TruncatedSeries:
        return cls.from_terms({0: 1}, cutoff)

    def __getitem__(self, degree: int) -> int:
        return self.coeffs[degree]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return series_mul(self, other)

    def __pow__(self, exponent: int) -> TruncatedSeries:
        return series_pow(self, exponent)

    def truncate(self, cutoff: int) -> TruncatedSeries:
        if cutoff > self.cutoff:
            raise SeriesError(f"cannot extend a series known to degree {self.cutoff}")
        return TruncatedSeries(self.coeffs[: cutoff + 1], cutoff)

    def __str__(self) -> str:
        terms = []
        for deg, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if deg == 0:
                terms.append(str(c))
            else:
                mono = "t" if deg == 1 else f"t^{deg}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(t^{self.cutoff + 1})"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product of two series with the same cutoff."""
    if a.cutoff != b.cutoff:
        raise SeriesError(f"cutoff mismatch: {a.cutoff} vs {b.cutoff}")
    n = a.cutoff
    out = [0] * (n + 1)
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j in range(n + 1 - i):
            bj = b.coeffs[j]
            if bj:
                out[i + j] += ai * bj
    return TruncatedSeries(tuple(out), n)


def series_pow(a: TruncatedSeries, exponent: int) -> TruncatedSeries:
    if exponent < 0:
        raise SeriesError("negative powers are not supported")
    result = TruncatedSeries.one(a.cutoff)
    base = a
    while exponent:
        if exponent & 1:
            result = series_mul(result, base)
        exponent >>= 1
        if exponent:
            base = series_mul(base, base)
    return result


def series_product(factors: Iterable[TruncatedSeries], cutoff: int) -> TruncatedSeries:
    result = TruncatedSeries.one(cutoff)
    for f in factors:
        result = series_mul(result, f)
    return result


def geometric_factor(r: int, cutoff: int) -> TruncatedSeries:
    """Expansion of ``1 / (1 - t^r)`` for a positive even ``r``.

    This is the Poincare series of ``K(Z, r)``: a polynomial algebra on one
    generator of degree ``r``.
    """
    if r <= 0:
        raise SeriesError(f"geometric factor needs a positive degree, got {r}")
    if r % 2:
        raise SeriesError(f"geometric factor needs an even degree, got {r}")
    return TruncatedSeries.from_terms({k: 1 for k in range(0, cutoff + 1, r)}, cutoff)


def exterior_factor(r: int, multiplicity: int, cutoff: int) -> TruncatedSeries:
    """Expansion of ``(1 + t^r) ** multiplicity`` for a positive odd ``r``."""
    if r <= 0 or r % 2 == 0:
        raise SeriesError(f"exterior factor needs a positive odd degree, got {r}")
    if multiplicity < 0:
        raise SeriesError(f"negative multiplicity {multiplicity}")
    terms = {r * k: comb(multiplicity, k) for k in range(multiplicity + 1) if r * k <= cutoff}
    return TruncatedSeries.from_terms(terms, cutoff)
