"""Rational homotopy invariants of spaces of maps into classifying spaces."""

from .graded import Generator, GeneratorSet, GradedDims, free_gca_hilbert, shift, tensor
from .mapping import (
    EMFactor,
    EMFactorization,
    EvenCellHypothesisError,
    HodgeTateTable,
    component_cohomology,
    hodge_tate_table,
    homotopy_ranks,
    lemma_hypersurface_series,
    poincare_series,
    thom_factorization,
)
from .oracle import CountTable, count_monomials
from .powerseries import TruncatedSeries, exterior_factor, geometric_factor, series_mul
from .space import (
    SpaceModel,
    make_curve,
    make_custom,
    make_hypersurface,
    make_point,
    make_projective,
    make_sphere,
    parse_space,
    product,
)
from .weyl import GroupSpec, SimpleType, invariant_degrees, parse_group, weyl_order

__version__ = "0.1.0"
