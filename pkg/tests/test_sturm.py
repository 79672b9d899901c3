from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings, strategies as st

from friedzeta.laurent import UniPoly
from friedzeta.sturm import (
    count_roots, isolate_largest_root, largest_real_root, root_bound, sturm_chain,
)

TOL = Fraction(1, 10**9)
TRIB = UniPoly.from_high(1, -1, -1, -1)
P01 = UniPoly.from_high(1, 0, -1, -4, -1, 0, 1)


def sympy_largest_root(p: UniPoly) -> float:
    t = sympy.symbols("t")
    roots = sympy.Poly(list(reversed(p.coeffs)), t).real_roots()
    return float(max(roots))


def test_linear():
    assert largest_real_root(UniPoly.from_high(1, -2)) == 2


def test_tribonacci_root():
    lo, hi = isolate_largest_root(TRIB, TOL)
    assert hi - lo <= TOL
    assert TRIB(lo) < 0 <= TRIB(hi)
    assert abs(float(largest_real_root(TRIB)) - 1.839286755214161) < 1e-9


def test_fiber_polynomial_shares_root():
    # its other factor t^3 + t^2 + t - 1 has all real roots below 1
    assert abs(largest_real_root(P01) - largest_real_root(TRIB)) <= TOL


def test_repeated_roots():
    p = UniPoly.from_high(1, -2, 1) * UniPoly.from_high(1, -3)  # (t-1)^2 (t-3)
    assert largest_real_root(p) == 3
    assert count_roots(sturm_chain(p), Fraction(0), Fraction(10)) == 2


def test_no_real_root():
    with pytest.raises(ValueError):
        largest_real_root(UniPoly.from_high(1, 0, 1))


def test_constant():
    with pytest.raises(ValueError):
        largest_real_root(UniPoly([3]))


def test_bad_tolerance():
    with pytest.raises(ValueError):
        largest_real_root(TRIB, Fraction(0))


def test_root_bound():
    assert root_bound(TRIB) == 2


small_polys = st.lists(st.integers(-6, 6), min_size=2, max_size=5).map(UniPoly).filter(
    lambda p: p.degree >= 1)


@settings(max_examples=60)
@given(small_polys, small_polys)
def test_product_root_is_max_of_factors(p, q):
    def root(x):
        try:
            return largest_real_root(x)
        except ValueError:
            return None

    rp, rq = root(p), root(q)
    assume(rp is not None or rq is not None)
    expected = max(r for r in (rp, rq) if r is not None)
    assert abs(largest_real_root(p * q) - expected) <= TOL


@settings(max_examples=60)
@given(small_polys)
def test_matches_sympy(p):
    try:
        ours = largest_real_root(p)
    except ValueError:
        t = sympy.symbols("t")
        assert not sympy.Poly(list(reversed(p.coeffs)), t).real_roots()
        return
    assert abs(float(ours) - sympy_largest_root(p)) < 1e-8
