"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from platskein.coefficients import LaurentPoly, RationalFunction
from platskein.quantum_torus import QTorusElement

small_int = st.integers(-3, 3)

laurent = st.dictionaries(st.integers(-6, 6), small_int, max_size=4).map(LaurentPoly)
nonzero_laurent = laurent.filter(lambda p: not p.is_zero())
rational = st.builds(RationalFunction, laurent, nonzero_laurent)
nonzero_rational = rational.filter(lambda r: not r.is_zero())
qtorus = st.dictionaries(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), nonzero_laurent, max_size=3).map(
    QTorusElement
)
