"""Hypothesis strategies shared by the property tests."""

from fractions import Fraction

from hypothesis import strategies as st

from subscheme_calc.polyring import GREVLEX_ORDER, LEX_ORDER, PolyRing, block_order

R3 = PolyRing(["x", "y", "z"])

coeffs = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4)).filter(bool)
monomials = st.tuples(*[st.integers(0, 3)] * 3)
orders = st.sampled_from([LEX_ORDER, GREVLEX_ORDER, block_order(1), block_order(2)])


def polys(max_terms=4, ring=R3):
    return st.dictionaries(monomials, coeffs, max_size=max_terms).map(ring.from_dict)


def nonzero_polys(max_terms=3, ring=R3):
    return st.dictionaries(monomials, coeffs, min_size=1, max_size=max_terms).map(ring.from_dict)
