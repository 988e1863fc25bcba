import pytest
import sympy
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st
from sympy.polys.subresultants_qq_zz import sylvester

from conftest import curve
from sextor.algebra import modp
from sextor.algebra.factor import factor_over_Q, is_irreducible, rational_roots, small_factors
from sextor.algebra.modp import FFPoly, factor_mod_p
from sextor.algebra.poly import RatPoly, parse_poly, poly_gcd, resultant, squarefree_part
from sextor.errors import ZeroPolynomial

X = sympy.Symbol("x")


def P(*coeffs):
    return RatPoly(list(coeffs))


def to_sympy(f):
    return sympy.Poly([sympy.Rational(int(c.numerator), int(c.denominator)) for c in reversed(f.coeffs)] or [0], X)


def sympy_degrees(f):
    return sorted(g.degree() for g, m in to_sympy(f).factor_list()[1] for _ in range(m))


small_ints = st.integers(min_value=-9, max_value=9)
polys = st.lists(small_ints, min_size=1, max_size=7).map(RatPoly).filter(lambda f: f.degree >= 1)


class TestRatPoly:
    def test_zero_degree(self):
        assert RatPoly([]).degree == -1
        assert RatPoly([0, 0]).degree == -1

    def test_trailing_zeros_trimmed(self):
        assert P(1, 2, 0, 0).coeffs == (1, 2)

    def test_exact_division(self):
        f = P(-1, 0, 0, 1)
        q, r = divmod(f, P(-1, 1))
        assert r.degree == -1 and q == P(1, 1, 1)

    def test_rational_coefficients(self):
        f = P(mpq(1, 3), mpq(-2, 7))
        assert (f * 21).coeffs == (7, -6)

    def test_parse(self):
        assert parse_poly("-5,0,0,0,0,0,1") == P(-5, 0, 0, 0, 0, 0, 1)


class TestGcd:
    def test_common_root(self):
        assert poly_gcd(P(-1, 0, 1), P(-1, 0, 0, 1)) == P(-1, 1)

    def test_with_zero_is_monic(self):
        assert poly_gcd(P(2, 4), RatPoly([])) == P(mpq(1, 2), 1)

    def test_five_and_two_torsion_disjoint(self):
        E = curve("11a1")
        assert poly_gcd(E.torsion_poly(5), E.two_torsion_poly()).degree == 0


class TestResultant:
    def test_linear(self):
        assert resultant(P(-2, 1), P(-3, 1)) == -1

    def test_common_roots(self):
        assert resultant(P(-1, 0, 1), P(-1, 0, 1)) == 0

    def test_quadratics(self):
        assert resultant(P(-2, 0, 1), P(-3, 0, 1)) == 1

    def test_zero_input(self):
        with pytest.raises(ZeroPolynomial):
            resultant(RatPoly([]), P(1, 1))

    @settings(max_examples=200, deadline=None)
    @given(polys, polys)
    def test_vanishes_iff_common_factor(self, f, g):
        assert (resultant(f, g) == 0) == (poly_gcd(f, g).degree >= 1)

    @settings(max_examples=50, deadline=None)
    @given(polys, polys)
    def test_matches_sylvester_determinant(self, f, g):
        want = sylvester(to_sympy(f).as_expr(), to_sympy(g).as_expr(), X, 1).det()
        num, den = sympy.fraction(want)
        assert resultant(f, g) == mpq(int(num), int(den))


class TestFactorModP:
    def test_split(self):
        facs = factor_mod_p(FFPoly([1, 0, 1], 5))
        assert sorted(g.c for g, m in facs) == [(2, 1), (3, 1)]

    def test_irreducible(self):
        facs = factor_mod_p(FFPoly([1, 0, 1], 3))
        assert [(g.c, m) for g, m in facs] == [((1, 0, 1), 1)]

    def test_sextic_mod_11(self):
        facs = factor_mod_p(FFPoly([-5, 0, 0, 0, 0, 0, 1], 11))
        degs = sorted(g.degree for g, m in facs for _ in range(m))
        want = sorted(g.degree() for g, m in sympy.Poly(X ** 6 - 5, X, modulus=11).factor_list()[1])
        assert degs == want == [1, 1, 2, 2]

    @settings(max_examples=60, deadline=None)
    @given(polys, st.sampled_from([3, 5, 7, 11, 13, 101]))
    def test_product_and_sympy(self, f, p):
        ints, den = f.int_rep()
        if int(ints[-1]) % p == 0:
            return
        F = FFPoly([int(c) for c in ints], p)
        facs = factor_mod_p(F)
        prod = FFPoly([1], p)
        for g, m in facs:
            for _ in range(m):
                prod = prod * g
        lc = F.c[-1]
        assert FFPoly([c * lc for c in prod.c], p) == F
        want = sympy.Poly([int(c) for c in reversed(ints)], X, modulus=p).factor_list()[1]
        assert sorted((g.degree, m) for g, m in facs) == sorted((g.degree(), m) for g, m in want)


class TestFactorOverQ:
    def test_x4_minus_1(self):
        fac = factor_over_Q(P(-1, 0, 0, 0, 1))
        assert fac.unit == 1
        assert sorted(g.coeffs for g, m in fac.factors) == sorted([(-1, 1), (1, 1), (1, 0, 1)])

    def test_unit_extracted(self):
        fac = factor_over_Q(P(0, -4, 0, 4))
        assert fac.unit == 4
        assert sorted(g.coeffs for g, m in fac.factors) == [(-1, 1), (0, 1), (1, 1)]

    def test_constant(self):
        fac = factor_over_Q(RatPoly([3]))
        assert fac.unit == 3 and fac.factors == ()

    def test_five_division_of_11a1(self):
        # independent oracle value (PARI and sympy agree)
        f = curve("11a1").torsion_poly(5)
        assert factor_over_Q(f).degrees() == sympy_degrees(f) == [1, 1, 2, 4, 4]

    @pytest.mark.parametrize("label,p", [("11a1", 7), ("50a3", 7), ("2450ba1", 7), ("26b1", 13), ("49a1", 13)])
    def test_division_polynomials_against_sympy(self, label, p):
        f = curve(label).torsion_poly(p)
        assert factor_over_Q(f).degrees() == sympy_degrees(f)

    def test_swinnerton_dyer(self):
        # x^4 - 10x^2 + 1 is irreducible over Q but splits modulo every prime
        f = P(1, 0, -10, 0, 1)
        assert is_irreducible(f)
        assert factor_over_Q(f * P(-1, 0, 1)).degrees() == [1, 1, 4]

    @settings(max_examples=80, deadline=None)
    @given(st.lists(polys, min_size=1, max_size=3), st.integers(1, 5))
    def test_reexpansion_and_irreducibility(self, parts, scale):
        f = RatPoly([scale])
        for g in parts:
            f = f * g
        fac = factor_over_Q(f)
        assert fac.expand() == f
        for g, _ in fac.factors:
            assert g.is_monic()
            assert len(factor_over_Q(g).factors) == 1
        assert fac.degrees() == sympy_degrees(f)

    @settings(max_examples=40, deadline=None)
    @given(st.lists(polys, min_size=1, max_size=3))
    def test_mod_p_pattern_refines(self, parts):
        f = RatPoly([1])
        for g in parts:
            f = f * g
        f = squarefree_part(f)
        ints, den = f.int_rep()
        for p in (5, 7, 11, 13, 17, 19, 23):
            hp = modp.norm([int(c) for c in ints], p)
            if int(ints[-1]) % p and modp.is_squarefree(hp, p):
                break
        else:
            return
        mod = sorted(modp.degree_pattern(hp, p))
        over_q = factor_over_Q(f).degrees()
        # each rational factor splits into a sub-multiset of the mod-p degrees
        remaining = list(mod)
        for g, _ in factor_over_Q(f).factors:
            gi, _ = g.int_rep()
            for d in modp.degree_pattern(modp.norm([int(c) for c in gi], p), p):
                remaining.remove(d)
        assert remaining == [] and sum(mod) == sum(over_q)


class TestRationalRoots:
    def test_two_roots(self):
        assert sorted(rational_roots(P(-4, 0, 1))) == [-2, 2]

    def test_none(self):
        assert list(rational_roots(P(1, 0, 1))) == []

    def test_two_torsion_of_17a1(self):
        assert len(rational_roots(curve("17a1").two_torsion_poly())) == 1

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=6), min_size=1, max_size=4), polys)
    def test_planted_roots(self, roots, cofactor):
        f = cofactor
        for r in roots:
            f = f * RatPoly([-mpq(r.numerator, r.denominator), 1])
        got = set(rational_roots(f))
        assert {mpq(r.numerator, r.denominator) for r in roots} <= got
        for r in got:
            assert f(r) == 0


class TestSmallFactors:
    def test_finds_low_degree_only(self):
        f = P(-1, 1) * P(1, 0, 1) * P(-2, 0, 0, 0, 0, 1)
        got = sorted(g.degree for g in small_factors(f, 2))
        assert got == [1, 2]
