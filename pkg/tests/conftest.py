from hypothesis import strategies as st

from ratmap.graded import Generator, GeneratorSet

generators = st.builds(
    Generator,
    degree=st.integers(min_value=1, max_value=12),
    multiplicity=st.integers(min_value=0, max_value=4),
)
generator_sets = st.lists(generators, max_size=8).map(lambda gs: GeneratorSet(tuple(gs)))
cutoffs = st.integers(min_value=0, max_value=24)
