import hypothesis.strategies as st
from fractions import Fraction

from hypothesis import settings

from qlogic.exactlin import ComplexRational, Vector
from qlogic.subspace import span

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_fracs = st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3))
scalars = st.builds(ComplexRational, small_fracs, small_fracs)
tiny = st.sampled_from([0, 0, 1, -1, (0, 1), (0, -1), (1, 1)]).map(
    lambda e: ComplexRational(*e) if isinstance(e, tuple) else ComplexRational(e))


def vectors(d, elements=tiny):
    return st.lists(elements, min_size=d, max_size=d).map(Vector)


def subspaces(d):
    return st.lists(vectors(d), min_size=0, max_size=d).map(lambda vs: span(vs, d))
