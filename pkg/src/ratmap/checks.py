"""Acceptance criteria and invariant suites.

Each check is a zero-argument function that raises ``AssertionError`` with
a short explanation on failure.  ``ratmap selftest`` runs all of them and
the test suite runs the acceptance subset.  All comparisons are exact.
Randomized checks use fixed seeds so a run is reproducible.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .graded import (
    GeneratorSet,
    Generator,
    GradedDims,
    free_gca_hilbert,
    shift,
    tensor,
)
from .mapping import (
    component_cohomology,
    hodge_tate_table,
    homotopy_ranks,
    lemma_hypersurface_series,
    poincare_series,
    thom_factorization,
)
from .oracle import count_monomials
from .powerseries import TruncatedSeries, geometric_factor, exterior_factor, series_mul
from .space import (
    make_curve,
    make_custom,
    make_hypersurface,
    make_point,
    make_projective,
    make_sphere,
    product,
)
from .weyl import (
    SimpleType,
    enumerate_weyl_group,
    invariant_degrees,
    parse_group,
    positive_roots,
    weyl_order,
)

SWEEP_GROUPS = ("A1", "A2", "B2", "G2", "A3", "C3", "D4", "A1xA1", "A2xG2")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def _oracle(gens, cutoff: int) -> tuple[int, ...]:
    return count_monomials(gens, cutoff).counts


def _gens(*pairs) -> list[Generator]:
    return [Generator(deg, mult) for deg, mult in pairs]


def random_generator_set(rng: random.Random, max_gens=8, max_degree=12, max_mult=4) -> GeneratorSet:
    n = rng.randint(0, max_gens)
    return GeneratorSet(
        tuple(Generator(rng.randint(1, max_degree), rng.randint(0, max_mult)) for _ in range(n))
    )


def random_custom_space(rng: random.Random):
    dim = rng.randint(0, 6)
    return make_custom([1] + [rng.randint(0, 3) for _ in range(dim)])


def sweep_spaces(seed: int = 2024):
    """Every constructor plus a batch of random custom Betti vectors."""
    spaces = [make_point()]
    spaces += [make_sphere(m) for m in range(1, 5)]
    spaces += [make_curve(g) for g in range(4)]
    spaces += [make_projective(k) for k in range(5)]
    spaces += [make_hypersurface(1, 4), make_hypersurface(2, 7), make_hypersurface(3, 2)]
    spaces += [
        product(make_projective(1), make_projective(1)),
        product(make_curve(1), make_sphere(2)),
        product(make_projective(2), make_sphere(4)),
    ]
    rng = random.Random(seed)
    spaces += [random_custom_space(rng) for _ in range(8)]
    return spaces


def sweep_pairs():
    return [(x, parse_group(g)) for x in sweep_spaces() for g in SWEEP_GROUPS]


# -- acceptance criteria ------------------------------------------------------


def criterion_curve_shape():
    a1 = parse_group("A1")
    for genus in range(4):
        expected = _oracle(_gens((3, 2 * genus), (2, 1), (4, 1)), 20)
        got = poincare_series(make_curve(genus), a1, 20).coeffs
        assert got == expected, f"genus {genus}: {got} != {expected}"
    got = poincare_series(make_curve(2), a1, 6).coeffs
    assert got == (1, 0, 1, 4, 2, 4, 8), f"genus 2 through t^6: {got}"


def criterion_circle_homotopy():
    for name in ("A1", "A2", "G2"):
        g = parse_group(name)
        for k in range(1, 21):
            expected = sum(1 for n in g.degrees if k in (2 * n, 2 * n - 1))
            got = homotopy_ranks(make_sphere(1), g, k)
            assert got == expected, f"{name}, k={k}: rank {got} != {expected}"


def criterion_projective_factors():
    for name in ("A1", "A2"):
        g = parse_group(name)
        for k in range(5):
            x = make_projective(k)
            fac = thom_factorization(x, g)
            expected = sorted(
                (2 * q, n) for n in g.degrees for q in range(k + 1) if 2 * n - 2 * q > 0
            )
            got = sorted(f.origin for f in fac.positive_factors)
            assert got == expected, f"{name}, P^{k}: factors {got} != {expected}"
            assert all(f.rank == 1 for f in fac.positive_factors)
            gens = [Generator(2 * n - q, 1) for q, n in expected]
            assert poincare_series(x, g, 24).coeffs == _oracle(gens, 24), f"{name}, P^{k}: series"


def criterion_lemma_consistency():
    for name in ("A1", "A2", "B2", "G2"):
        g = parse_group(name)
        for k in range(1, 5):
            for d in range(11):
                if k % 2 == 0 and d == 0:
                    continue
                lemma = lemma_hypersurface_series(k, d, g, 24)
                direct = poincare_series(make_hypersurface(k, d), g, 24)
                assert lemma == direct, f"{name}, k={k}, d={d}: {lemma} != {direct}"
        for k in range(1, 5):
            d = 0 if k % 2 else 1
            assert lemma_hypersurface_series(k, d, g, 24) == poincare_series(
                make_projective(k), g, 24
            ), f"{name}, degenerate k={k}, d={d} differs from P^{k}"


def criterion_collapse_shadow():
    pairs = sweep_pairs()
    assert len(pairs) >= 50
    for x, g in pairs:
        gs = component_cohomology(x, g, conjectural=True)
        a = free_gca_hilbert(gs, 24)
        b = poincare_series(x, g, 24)
        assert a == b, f"{x.label} / {g}: {a} != {b}"


def criterion_weyl_integrity():
    for name in ("A1", "A2", "A3", "B2", "B3", "C3", "G2"):
        s = parse_group(name).factors[0]
        order = len(enumerate_weyl_group(s))
        assert order == weyl_order(parse_group(name)), f"{name}: |W| = {order}"
    for s in supported_types():
        count = len(positive_roots(s))
        expected = sum(n - 1 for n in invariant_degrees(s))
        assert count == expected, f"{s}: {count} positive roots, degrees give {expected}"


def supported_types(max_rank: int = 8) -> list[SimpleType]:
    types = [SimpleType("A", n) for n in range(1, max_rank + 1)]
    types += [SimpleType("B", n) for n in range(2, max_rank + 1)]
    types += [SimpleType("C", n) for n in range(2, max_rank + 1)]
    types += [SimpleType("D", n) for n in range(3, max_rank + 1)]
    types += [SimpleType("E", n) for n in (6, 7, 8)]
    types += [SimpleType("F", 4), SimpleType("G", 2)]
    return types


def criterion_oracle_independence(trials: int = 200, seed: int = 7):
    rng = random.Random(seed)
    for _ in range(trials):
        gs = random_generator_set(rng)
        cutoff = rng.randint(0, 24)
        a = free_gca_hilbert(gs, cutoff).coeffs
        b = _oracle(gs, cutoff)
        assert a == b, f"{gs}: {a} != {b}"


def criterion_lie_group_exterior():
    expected = {"A1": {0: 1, 3: 1}, "A2": {0: 1, 3: 1, 5: 1, 8: 1}}
    for name, terms in expected.items():
        g = parse_group(name)
        v = GradedDims({2 * n: 1 for n in g.degrees})
        gs = GeneratorSet.free_on(shift(v, 1))
        got = free_gca_hilbert(gs, 12)
        assert got == TruncatedSeries.from_terms(terms, 12), f"{name}: {got}"
        assert got.coeffs == _oracle(gs, 12), f"{name}: oracle disagrees"


def criterion_hodge_tate():
    seen = 0
    for x, g in sweep_pairs():
        if not x.even_cells_only:
            continue
        seen += 1
        table = hodge_tate_table(component_cohomology(x, g), 24)
        series = poincare_series(x, g, 24)
        assert not table.conjectural
        dims = [0] * 25
        for row in table.rows:
            assert row.degree % 2 == 0, f"{x.label} / {g}: odd row {row}"
            assert row.weight == Fraction(row.degree, 2)
            dims[row.degree] += row.dimension
        assert tuple(dims) == series.coeffs, f"{x.label} / {g}: {dims} != {series.coeffs}"
    assert seen > 0


ACCEPTANCE: list[tuple[str, Callable[[], None]]] = [
    ("1 curve series matches (1+t^3)^2g / ((1-t^2)(1-t^4))", criterion_curve_shape),
    ("2 circle homotopy ranks", criterion_circle_homotopy),
    ("3 projective space factors and series", criterion_projective_factors),
    ("4 hypersurface closed form", criterion_lemma_consistency),
    ("5 presentation series equals mapping-space series", criterion_collapse_shadow),
    ("6 Weyl group orders and root counts", criterion_weyl_integrity),
    ("7 oracle agrees with closed forms", criterion_oracle_independence),
    ("8 H*(G) exterior on V[1]", criterion_lie_group_exterior),
    ("9 Hodge-Tate tables", criterion_hodge_tate),
]


# -- module invariants --------------------------------------------------------


def invariant_series_algebra(seed: int = 11):
    rng = random.Random(seed)
    for _ in range(50):
        n = rng.randint(0, 12)
        a, b, c = (
            TruncatedSeries(tuple(rng.randint(-5, 5) for _ in range(n + 1)), n) for _ in range(3)
        )
        assert series_mul(a, b) == series_mul(b, a)
        assert series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c))
    for r in (2, 4, 6):
        for n in range(13):
            one_minus = TruncatedSeries.from_terms({0: 1, r: -1}, n)
            assert series_mul(geometric_factor(r, n), one_minus) == TruncatedSeries.one(n)
    for r in (1, 3, 5):
        for d in range(5):
            prod = TruncatedSeries.one(12)
            for _ in range(d):
                prod = series_mul(prod, exterior_factor(r, 1, 12))
            assert exterior_factor(r, d, 12) == prod


def invariant_graded(seed: int = 13):
    rng = random.Random(seed)
    for _ in range(50):
        v = GradedDims({rng.randint(0, 10): rng.randint(0, 3) for _ in range(4)})
        i, j = rng.randint(0, 6), rng.randint(0, 6)
        assert shift(shift(v, i), j) == shift(v, i + j)
        a, b = random_generator_set(rng), random_generator_set(rng)
        n = rng.randint(0, 24)
        ha, hb = free_gca_hilbert(a, n), free_gca_hilbert(b, n)
        assert free_gca_hilbert(tensor(a, b), n) == series_mul(ha, hb)
        assert ha[0] == 1
        more = tensor(a, GeneratorSet((Generator(rng.randint(1, 12), 1),)))
        assert all(x <= y for x, y in zip(ha, free_gca_hilbert(more, n)))


def invariant_spaces(seed: int = 17):
    rng = random.Random(seed)
    spaces = sweep_spaces()
    for _ in range(30):
        a, b, c = rng.choice(spaces), rng.choice(spaces), rng.choice(spaces)
        assert product(a, b).betti == product(b, a).betti
        assert product(product(a, b), c).betti == product(a, product(b, c)).betti
        assert product(a, make_point()).betti == a.betti
    for k in range(1, 6):
        for d in range(4):
            if k % 2 == 0 and d == 0:
                continue
            betti = make_hypersurface(k, d).betti
            assert betti == betti[::-1]
    assert make_curve(1).betti == product(make_sphere(1), make_sphere(1)).betti


def invariant_mapping():
    for x, g in sweep_pairs():
        fac = thom_factorization(x, g)
        for k in range(1, 25):
            expected = sum(f.rank for f in fac.positive_factors if f.degree == k)
            assert homotopy_ranks(x, g, k) == expected, f"{x.label} / {g}, k={k}"
        series = poincare_series(x, g, 24)
        assert series[0] == 1
        if x.even_cells_only:
            assert all(f.degree % 2 == 0 for f in fac.positive_factors)
            assert all(c == 0 for c in series.coeffs[1::2])
    for name in SWEEP_GROUPS:
        g = parse_group(name)
        sym_v = GeneratorSet(tuple(Generator(2 * n) for n in g.degrees))
        assert poincare_series(make_point(), g, 24) == free_gca_hilbert(sym_v, 24)


INVARIANTS: list[tuple[str, Callable[[], None]]] = [
    ("series product is commutative, associative; factor identities", invariant_series_algebra),
    ("shift composition, tensor/Hilbert multiplicativity, monotonicity", invariant_graded),
    ("Kunneth product laws, hypersurface duality", invariant_spaces),
    ("homotopy ranks match factors; series sanity", invariant_mapping),
]


def run_check(name: str, fn: Callable[[], None]) -> CheckResult:
    start = time.perf_counter()
    try:
        fn()
    except AssertionError as exc:
        return CheckResult(name, False, str(exc) or "assertion failed", time.perf_counter() - start)
    return CheckResult(name, True, "ok", time.perf_counter() - start)


def run_all() -> list[CheckResult]:
    return [run_check(name, fn) for name, fn in ACCEPTANCE + INVARIANTS]
