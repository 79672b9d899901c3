from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from friedzeta.laurent import LaurentPoly, UniPoly, parse_laurent, specialize, symmetry_witness
from friedzeta.words import FreeEndomorphism, Word, parse_endomorphism
from friedzeta.zeta import (
    DegenerateQuotientError, ZetaFunction, ay_family_polynomial, build_model, divides,
    exact_quotient, genus_search, is_section, largest_real_root, min_section_degree, section,
    sections_with_degree, zeta,
)

from conftest import vt

ZETA = "1 - v*t^2 - 4*v*t^3 - v*t^4 + v^2*t^6"
NUMERATOR = "1 - t - v*t^2 - 3*v*t^3 + 3*v*t^4 + v*t^5 + v^2*t^6 - v^2*t^7"
TRIB = UniPoly.from_high(1, -1, -1, -1)


def one_var(text):
    return parse_laurent(text, ["v"])


def brute_force_sections(d, box):
    """Sections of degree d from the literal numerator support, no library calls."""
    num_support = [(0, 1), (1, 2), (1, 3), (1, 4), (1, 5), (2, 6), (2, 7)]
    reduced_support = [(0, 0), (1, 2), (1, 3), (1, 4), (2, 6)]
    out = set()
    for a in range(-box, box + 1):
        for b in range(-box, box + 1):
            if all(a * i + b * j > 0 for i, j in num_support):
                if max(a * i + b * j for i, j in reduced_support) == d:
                    out.add((a, b))
    return out


class TestBuildModel:
    def test_ay(self, ay_model):
        model, _ = ay_model
        assert model.psi.row(0) == (0, -1, 0, 0, 1, 0, 1)
        assert model.torsion == (2,)
        assert model.F0 == [[LaurentPoly.constant(1, 1)]]
        assert model.num_deck_vars == 1

    def test_identity_rank_one(self):
        model = build_model(FreeEndomorphism.identity(1))
        assert model.psi.tolist() == [[1]]
        assert model.F1 == [[LaurentPoly.constant(1, 1)]]

    def test_squaring_is_degenerate(self):
        phi = FreeEndomorphism(1, (Word([(0, 1), (0, 1)]),))
        with pytest.raises(DegenerateQuotientError):
            build_model(phi)


class TestZeta:
    def test_ay(self, ay_zeta):
        assert ay_zeta.numerator == vt(NUMERATOR)
        assert ay_zeta.denominator == vt("1 - t")
        assert ay_zeta.reduced == vt(ZETA)
        assert ay_zeta.num_deck_vars == 1

    def test_not_reducible(self):
        z = zeta([[one_var("1")]], [[one_var("v")]])
        assert z.numerator == vt("1 - v*t")
        assert z.denominator == vt("1 - t")
        assert z.reduced is None

    def test_identity_two(self):
        one, zero = one_var("1"), one_var("0")
        z = zeta([[one]], [[one, zero], [zero, one]])
        assert z.numerator == vt("1 - 2*t + t^2")
        assert z.reduced == vt("1 - t")

    def test_constant_terms(self, ay_zeta):
        for p in (ay_zeta.numerator, ay_zeta.denominator, ay_zeta.reduced):
            assert p.coefficient((0, 0)) == 1
        assert ay_zeta.denominator * ay_zeta.reduced == ay_zeta.numerator

    def test_symmetry(self, ay_zeta):
        assert symmetry_witness(ay_zeta.reduced) == (1, (2, 6))

    def test_sympy_oracle(self, ay_model):
        model, z = ay_model
        v, t = sympy.symbols("v t")
        F1 = sympy.Matrix([[e.evaluate((v,)) for e in row] for row in model.F1])
        det = sympy.expand((sympy.eye(7) - t * F1).det())
        assert sympy.expand(det - z.numerator.evaluate((v, t))) == 0


class TestIsSection:
    def test_fiber(self, ay_zeta):
        assert is_section(ay_zeta, (0,), 1)

    def test_b_zero(self, ay_zeta):
        assert not is_section(ay_zeta, (0,), 0)

    def test_monomial_killed(self, ay_zeta):
        assert not is_section(ay_zeta, (-2,), 1)

    def test_int_accepted(self, ay_zeta):
        assert is_section(ay_zeta, -1, 1)

    def test_wrong_length(self, ay_zeta):
        with pytest.raises(ValueError):
            is_section(ay_zeta, (0, 0), 1)


class TestSection:
    @pytest.mark.parametrize("a,b,high", [
        (0, 1, (1, 0, -1, -4, -1, 0, 1)),
        (-1, 1, (1, -1, -4, -1, 1)),
        (1, 1, (1, 0, 0, -1, -4, -1, 0, 0, 1)),
    ])
    def test_polynomials(self, ay_zeta, a, b, high):
        s = section(ay_zeta, a, b)
        assert s.poly == UniPoly.from_high(*high)
        assert s.degree == len(high) - 1
        assert s.euler_characteristic == -s.degree

    def test_not_a_section(self, ay_zeta):
        with pytest.raises(ValueError):
            section(ay_zeta, -2, 1)

    def test_root_interval(self, ay_zeta):
        s = section(ay_zeta, 0, 1)
        lo, hi = s.leading_root
        assert hi - lo <= Fraction(1, 10**9)
        assert abs(float(s.root_estimate()) - 1.839286755) < 1e-9


class TestEnumeration:
    def test_degree_six(self, ay_zeta):
        found = sections_with_degree(ay_zeta, 6)
        assert [(s.a[0], s.b) for s in found] == [(-3, 2), (0, 1)]
        assert {(s.a[0], s.b) for s in found} == brute_force_sections(6, 40)

    def test_degree_two_empty(self, ay_zeta):
        assert sections_with_degree(ay_zeta, 2) == []
        assert brute_force_sections(2, 40) == set()

    @pytest.mark.parametrize("g", range(2, 11))
    def test_degree_2g(self, ay_zeta, g):
        found = {(s.a[0], s.b) for s in sections_with_degree(ay_zeta, 2 * g)}
        assert found == {(g - 3 * b, b) for b in range(1, g)}

    def test_odd_degrees_empty(self, ay_zeta):
        for d in (1, 3, 5, 7):
            assert sections_with_degree(ay_zeta, d) == []

    def test_min_degree(self, ay_zeta):
        d, found = min_section_degree(ay_zeta)
        assert d == 4
        assert [(s.a[0], s.b) for s in found] == [(-1, 1)]

    def test_min_degree_synthetic(self):
        # 1 - v t: sections need b >= 1 (from 1 - t) and a + b >= 1; (0,1) has degree 1
        z = zeta([[one_var("1")]], [[one_var("v")]])
        z = ZetaFunction(z.numerator, z.denominator, vt("1 - v*t"), 1)
        d, found = min_section_degree(z)
        assert d == 1
        assert [(s.a[0], s.b) for s in found] == [(0, 1)]

    def test_needs_reduced(self):
        z = zeta([[one_var("1")]], [[one_var("v")]])
        with pytest.raises(ValueError):
            sections_with_degree(z, 2)

    def test_box_completeness(self, ay_zeta):
        for d in range(1, 21):
            base = sections_with_degree(ay_zeta, d)
            wide = sections_with_degree(ay_zeta, d, bound=2 * d * 3)
            assert base == wide

    def test_section_invariants(self, ay_zeta):
        for d in range(1, 21):
            for s in sections_with_degree(ay_zeta, d):
                u = s.a + (s.b,)
                assert is_section(ay_zeta, s.a, s.b)
                assert specialize(ay_zeta.numerator, u) == \
                    specialize(ay_zeta.denominator, u) * s.poly
                assert s.poly.coeffs[0] == 1
                top = max(sum(w * e for w, e in zip(u, exp)) for exp in ay_zeta.reduced.support())
                assert s.degree == top
                rev = s.poly.reversed()
                assert rev == s.poly or rev == -s.poly


class TestDivides:
    def test_fiber_divisible(self):
        p01 = UniPoly.from_high(1, 0, -1, -4, -1, 0, 1)
        q = exact_quotient(p01, TRIB)
        assert q == UniPoly.from_high(1, 1, 1, -1)
        assert q * TRIB == p01

    def test_genus_four_not_divisible(self):
        p11 = UniPoly.from_high(1, 0, 0, -1, -4, -1, 0, 0, 1)
        assert not divides(p11, UniPoly.from_high(1, -1, -1, -1, -1))

    def test_by_one(self):
        assert divides(UniPoly.from_high(3, 1, 4), UniPoly([1]))

    def test_other_degree_six_class(self):
        p = UniPoly.from_high(1, -1, 0, -4, 0, -1, 1)
        t = sympy.symbols("t")
        _, rem = sympy.div(sympy.Poly([1, -1, 0, -4, 0, -1, 1], t), sympy.Poly([1, -1, -1, -1], t))
        assert not rem.is_zero
        assert not divides(p, TRIB)

    def test_family_polynomial(self):
        assert ay_family_polynomial(3) == TRIB
        assert ay_family_polynomial(4).to_str("x") == "x^4 - x^3 - x^2 - x - 1"

    @settings(max_examples=50)
    @given(st.lists(st.integers(-5, 5), min_size=1, max_size=4),
           st.lists(st.integers(-5, 5), min_size=1, max_size=4))
    def test_product_is_divisible(self, a, b):
        p, m = UniPoly(a), UniPoly(b + [1])
        assert divides(p * m, m)


class TestGenusSearch:
    def test_four_to_ten(self, ay_zeta):
        rows = genus_search(ay_zeta, 4, 10)
        assert [r.genus for r in rows] == list(range(4, 11))
        for r in rows:
            assert len(r.sections) == r.genus - 1
            assert not any(r.verdicts)

    def test_genus_three(self, ay_zeta):
        (row,) = genus_search(ay_zeta, 3, 3)
        verdicts = {(s.a[0], s.b): v for s, v in zip(row.sections, row.verdicts)}
        assert verdicts == {(0, 1): True, (-3, 2): False}

    def test_needs_one_variable(self):
        phi = parse_endomorphism("a b\na -> a\nb -> b\n")
        model = build_model(phi)
        z = zeta(model.F0, model.F1)
        assert z.num_deck_vars == 2
        with pytest.raises(ValueError):
            genus_search(z, 2, 3)


def test_root_reexport():
    assert abs(float(largest_real_root(TRIB)) - 1.839286755) < 1e-9
