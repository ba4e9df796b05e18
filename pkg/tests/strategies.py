"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from homlie.multilinear import LinearMap, Tensor2
from homlie.scalars import gauss, symbols

small_int = st.integers(min_value=-6, max_value=6)
rationals = st.builds(Fraction, small_int, st.integers(min_value=1, max_value=5))
gaussians = st.builds(gauss, rationals, rationals)
nonzero_gaussians = gaussians.filter(bool)


@st.composite
def polys(draw, max_terms=3):
    a, b, c = symbols()
    out = draw(rationals)
    for _ in range(draw(st.integers(0, max_terms))):
        e = draw(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 1)))
        out = out + draw(small_int) * a ** e[0] * b ** e[1] * c ** e[2]
    return out


@st.composite
def ratfuncs(draw):
    num = draw(polys())
    den = draw(polys(max_terms=2).filter(bool))
    return num / den


def tensors2(dim=3, values=rationals):
    return st.lists(values, min_size=dim * dim, max_size=dim * dim).map(
        lambda xs: Tensor2([xs[i * dim:(i + 1) * dim] for i in range(dim)]))


def matrices(dim=3, values=rationals):
    return st.lists(values, min_size=dim * dim, max_size=dim * dim).map(
        lambda xs: LinearMap([xs[i * dim:(i + 1) * dim] for i in range(dim)]))


def fixed_pairs(diag):
    """Index pairs (i, j) with diag[i] * diag[j] == 1."""
    n = len(diag)
    return [(i, j) for i in range(n) for j in range(n) if diag[i] * diag[j] == 1]


@st.composite
def diag_fixed_tensors(draw, diag, values=rationals, antisymmetric=False):
    """A random tensor fixed by diag (x) diag, optionally anti-symmetric."""
    terms = []
    for i, j in fixed_pairs(diag):
        if antisymmetric and i >= j:
            continue
        v = draw(values)
        terms.append(((i, j), v))
        if antisymmetric:
            terms.append(((j, i), -v))
    return Tensor2.from_terms(len(diag), terms)


sl2_b_values = st.one_of(st.sampled_from([Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 3)]),
                         nonzero_gaussians)
