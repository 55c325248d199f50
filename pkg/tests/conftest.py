from fractions import Fraction

from hypothesis import strategies as st

from siegel_chow.polycore import Poly


def polys(nvars=3, max_terms=4, max_exp=2):
    """Small random polynomials with small rational coefficients."""
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=3)
    exps = st.tuples(*[st.integers(0, max_exp)] * nvars)
    return st.dictionaries(exps, coeff, max_size=max_terms).map(lambda d: Poly(nvars, d))


def random_poly(rng, nvars, degree, nterms=4):
    terms = {}
    for _ in range(nterms):
        cuts = sorted(rng.randint(0, degree) for _ in range(nvars - 1))
        parts = [b - a for a, b in zip([0] + cuts, cuts + [degree])]
        terms[tuple(parts)] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return Poly(nvars, terms)
