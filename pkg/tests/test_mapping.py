from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ratmap.graded import Generator, GeneratorSet, free_gca_hilbert
from ratmap.mapping import (
    EMFactor,
    EvenCellHypothesisError,
    HodgeTateRow,
    HodgeTateTable,
    InternalInvariantError,
    component_cohomology,
    hodge_tate_table,
    homotopy_ranks,
    lemma_hypersurface_series,
    poincare_series,
    thom_factorization,
)
from ratmap.oracle import count_monomials
from ratmap.space import (
    make_curve,
    make_custom,
    make_hypersurface,
    make_point,
    make_projective,
    make_sphere,
)
from ratmap.weyl import parse_group

A1, A2, G2 = parse_group("A1"), parse_group("A2"), parse_group("G2")
GROUPS = [parse_group(s) for s in ("A1", "A2", "B2", "G2", "A1xA1", "A3", "A2xG2")]


def summary(fac):
    return [(f.rank, f.degree, f.q, f.n) for f in fac]


def test_factors_curve_genus_two():
    fac = thom_factorization(make_curve(2), A1)
    assert summary(fac.positive_factors) == [(1, 4, 0, 2), (4, 3, 1, 2), (1, 2, 2, 2)]
    assert fac.degree_zero_factors == ()
    assert [str(f) for f in fac] == ["K(Z,4)", "K(Z^4,3)", "K(Z,2)"]


def test_factors_point():
    fac = thom_factorization(make_point(), A2)
    assert summary(fac.positive_factors) == [(1, 4, 0, 2), (1, 6, 0, 3)]


def test_factors_degree_zero_edge():
    fac = thom_factorization(make_sphere(4), A1)
    assert summary(fac.positive_factors) == [(1, 4, 0, 2)]
    assert summary(fac.degree_zero_factors) == [(1, 0, 4, 2)]


def test_factor_invariant():
    with pytest.raises(InternalInvariantError):
        EMFactor(1, 3, 0, 2)


def test_series_examples():
    assert poincare_series(make_curve(2), A1, 6).coeffs == (1, 0, 1, 4, 2, 4, 8)
    assert poincare_series(make_point(), A2, 6).coeffs == (1, 0, 0, 0, 1, 0, 1)
    assert poincare_series(make_projective(1), A1, 4).coeffs == (1, 0, 1, 0, 2)


def test_series_against_oracle_p1():
    assert poincare_series(make_projective(1), A1, 4).coeffs == count_monomials(
        [Generator(4), Generator(2)], 4
    ).counts


def test_lemma_examples():
    assert lemma_hypersurface_series(1, 4, A1, 6) == poincare_series(make_curve(2), A1, 6)
    assert lemma_hypersurface_series(2, 1, A1, 8) == poincare_series(make_projective(2), A1, 8)
    assert lemma_hypersurface_series(3, 0, A1, 8) == poincare_series(make_projective(3), A1, 8)


def test_lemma_p3_value():
    # factors K(Z,4), K(Z,2): 1 / ((1 - t^2)(1 - t^4))
    assert lemma_hypersurface_series(3, 0, A1, 8).coeffs == count_monomials(
        [Generator(2), Generator(4)], 8
    ).counts


@pytest.mark.parametrize("k, d", [(0, 1), (2, 0), (3, -1)])
def test_lemma_domain(k, d):
    with pytest.raises(ValueError):
        lemma_hypersurface_series(k, d, A1, 4)


@settings(max_examples=60)
@given(st.integers(1, 4), st.integers(0, 10), st.sampled_from(GROUPS), st.integers(0, 24))
def test_lemma_matches_general_formula(k, d, g, n):
    if k % 2 == 0 and d == 0:
        d = 1
    assert lemma_hypersurface_series(k, d, g, n) == poincare_series(make_hypersurface(k, d), g, n)


def test_homotopy_examples():
    s1 = make_sphere(1)
    assert [homotopy_ranks(s1, A1, k) for k in (4, 3, 2)] == [1, 1, 0]
    assert [homotopy_ranks(make_point(), A1, k) for k in range(1, 10)] == [0, 0, 0, 1, 0, 0, 0, 0, 0]
    assert homotopy_ranks(make_curve(2), A2, 3) == 4


def test_homotopy_domain():
    with pytest.raises(ValueError):
        homotopy_ranks(make_point(), A1, 0)


spaces = st.one_of(
    st.just(make_point()),
    st.integers(1, 6).map(make_sphere),
    st.integers(0, 4).map(make_curve),
    st.integers(0, 4).map(make_projective),
    st.lists(st.integers(0, 3), max_size=6).map(lambda t: make_custom([1] + t)),
)


@given(spaces, st.sampled_from(GROUPS), st.integers(1, 30))
def test_homotopy_ranks_match_factors(x, g, k):
    fac = thom_factorization(x, g)
    assert homotopy_ranks(x, g, k) == sum(f.rank for f in fac.positive_factors if f.degree == k)


@given(spaces, st.sampled_from(GROUPS), st.integers(0, 24))
def test_presentation_series_equals_mapping_series(x, g, n):
    gs = component_cohomology(x, g, conjectural=True)
    assert free_gca_hilbert(gs, n) == poincare_series(x, g, n)
    assert poincare_series(x, g, n)[0] == 1


@pytest.mark.parametrize("g", GROUPS, ids=str)
def test_point_series_is_sym_v(g):
    sym_v = GeneratorSet(tuple(Generator(2 * n) for n in g.degrees))
    assert poincare_series(make_point(), g, 24) == free_gca_hilbert(sym_v, 24)


def test_cohomology_p1():
    gs = component_cohomology(make_projective(1), A1)
    assert [(x.degree, x.parity, x.multiplicity, x.twist) for x in gs] == [
        (4, "even", 1, 2),
        (2, "even", 1, 1),
    ]
    assert not gs.conjectural


def test_cohomology_point_g2():
    gs = component_cohomology(make_point(), G2)
    assert [(x.degree, x.twist) for x in gs] == [(4, 2), (12, 6)]


def test_cohomology_curve_conjectural():
    gs = component_cohomology(make_curve(2), A1, conjectural=True)
    assert [(x.degree, x.parity, x.multiplicity) for x in gs] == [
        (4, "even", 1),
        (3, "odd", 4),
        (2, "even", 1),
    ]
    assert gs.conjectural
    assert free_gca_hilbert(gs, 20) == poincare_series(make_curve(2), A1, 20)


def test_cohomology_refuses_without_even_cells():
    with pytest.raises(EvenCellHypothesisError, match="no cell of odd dimension"):
        component_cohomology(make_custom([1, 0, 2]), A1)
    with pytest.raises(EvenCellHypothesisError):
        component_cohomology(make_curve(2), A1)


def test_cohomology_override():
    gs = component_cohomology(make_custom([1, 0, 2]), A1, assume_even_cells=True)
    assert free_gca_hilbert(gs, 12) == poincare_series(make_custom([1, 0, 2]), A1, 12)
    with pytest.raises(EvenCellHypothesisError, match="odd cohomology"):
        component_cohomology(make_custom([1, 3]), A1, assume_even_cells=True)


def test_cohomology_skips_degree_zero():
    gs = component_cohomology(make_sphere(4), A1)
    assert [(x.degree, x.multiplicity) for x in gs] == [(4, 1)]


def rows(table):
    return [(r.degree, r.weight, r.dimension) for r in table]


def test_hodge_point():
    table = hodge_tate_table(component_cohomology(make_point(), A1), 8)
    assert rows(table) == [(0, 0, 1), (4, 2, 1), (8, 4, 1)]
    assert not table.conjectural


def test_hodge_p1():
    table = hodge_tate_table(component_cohomology(make_projective(1), A1), 4)
    assert rows(table) == [(0, 0, 1), (2, 1, 1), (4, 2, 2)]


def test_hodge_empty():
    assert rows(hodge_tate_table(GeneratorSet(), 10)) == [(0, 0, 1)]


def test_hodge_conjectural_marks_odd_rows():
    table = hodge_tate_table(component_cohomology(make_curve(1), A1, conjectural=True), 6)
    assert table.conjectural
    assert (3, Fraction(3, 2), 2) in rows(table)


def test_hodge_invariant_violation():
    with pytest.raises(InternalInvariantError):
        HodgeTateTable((HodgeTateRow(3, Fraction(3, 2), 1),), conjectural=False)
    with pytest.raises(InternalInvariantError):
        HodgeTateTable((HodgeTateRow(4, Fraction(1), 1),))
