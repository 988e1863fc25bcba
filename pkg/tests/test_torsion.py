import pytest
from hypothesis import given, settings, strategies as st

from conftest import curve, expected_rows
from sextor.algebra.poly import RatPoly
from sextor.catalog import PHI1, in_phi_star6
from sextor.curves import curve_create
from sextor.errors import NotTorsionWithinBound
from sextor.numfield import NumberField, field_from_coeffs, has_root_in
from sextor.structure import S, TorsionStructure
from sextor.torsion import (n_torsion_count, point_order, rationals, subgroup_elements, torsion_bound,
                            torsion_over_K, torsion_over_Q)

X6_5 = field_from_coeffs("-5,0,0,0,0,0,1")


def check_generators(T):
    """Generator orders are (mk, m) and they span a group of the claimed size."""
    s = T.structure
    gens = T.generators
    assert point_order(gens[0]) == s.n if gens else s.order == 1
    if s.m > 1:
        assert point_order(gens[1]) == s.m
    if gens and s.order <= 48:
        assert len(subgroup_elements(gens)) == s.order
    for P in gens:
        n = point_order(P)
        assert (n * P).is_zero()
        for q in (2, 3, 5, 7, 13):
            if n % q == 0:
                assert not ((n // q) * P).is_zero()


class TestStructure:
    def test_parse_and_print(self):
        assert str(S("2,6")) == "2,6" and str(S(5)) == "5"
        assert S("(2,6)") == TorsionStructure(2, 3)

    def test_invariant_form(self):
        assert TorsionStructure.of(4, 6) == S("2,12")

    def test_containment(self):
        assert S("2,10").contains(S(5)) and not S(10).contains(S("2,2"))

    def test_bad(self):
        with pytest.raises(ValueError):
            S("3,4")


class TestBound:
    def test_support(self):
        for lab in ("11a1", "14a1", "50a3", "162d1", "2450ba1"):
            B = torsion_bound(curve(lab))
            rest = B
            for q in (2, 3, 5, 7, 13):
                while rest % q == 0:
                    rest //= q
            assert rest == 1

    def test_divisible_by_torsion(self):
        assert torsion_bound(curve("11a1")) % 5 == 0
        assert torsion_bound(curve("50a4"), X6_5) % 15 == 0


class TestOverQ:
    def test_examples(self):
        assert torsion_over_Q(curve("11a1")).structure == S(5)
        assert torsion_over_Q(curve("50a3")).structure == S(3)
        assert torsion_over_Q(curve_create(0, 0, 0, -1, 0)).structure == S("2,2")

    def test_fixtures_in_mazur_list(self):
        for rec in list(expected_rows("base"))[:40]:
            T = torsion_over_Q(curve(rec.label))
            assert T.structure in PHI1
            check_generators(T)


class TestCounts:
    def test_irreducible_two_division(self):
        assert n_torsion_count(curve("11a1"), rationals(), 2) == 1

    def test_rational_five_torsion(self):
        assert n_torsion_count(curve("11a1"), rationals(), 5) == 5

    def test_full_three_torsion(self):
        # 27a1 has full 3-torsion over Q(zeta_3)
        E = curve("27a1")
        K = NumberField(RatPoly([1, 1, 1]))
        assert n_torsion_count(E, K, 3) == 9


class TestOverK:
    def test_50a4(self):
        T = torsion_over_K(curve("50a4"), X6_5)
        assert T.structure == S(15)
        check_generators(T)

    def test_27a2(self):
        T = torsion_over_K(curve("27a2"), field_from_coeffs("1,-3,0,5,0,-3,1"))
        assert T.structure == S("2,6")
        check_generators(T)

    @pytest.mark.slow
    def test_162d1_sporadic(self):
        T = torsion_over_K(curve("162d1"), field_from_coeffs("4,0,-12,0,9,0,1"))
        assert T.structure == S("4,12")
        check_generators(T)

    def test_1728e3_order_18(self):
        T = torsion_over_K(curve("1728e3"), field_from_coeffs("6,0,-3,0,0,0,1"))
        assert T.structure == S("2,18")
        assert point_order(T.generators[0]) == 18

    def test_point_order_rejects_non_torsion(self):
        E = curve_create(0, 0, 1, -1, 0)
        with pytest.raises(NotTorsionWithinBound):
            point_order(E.point(0, 0))
        assert point_order(E.zero()) == 1

    def test_rational_five_point_order(self):
        assert point_order(curve("11a1").point(5, 5)) == 5


QUADS = [-1, 2, -2, 3, -3, 5, -5, -7, 13, -15]


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["11a1", "14a1", "15a1", "17a1", "26b1", "50a3", "50b1", "27a1", "49a1", "2450ba1"]),
       st.sampled_from(QUADS))
def test_quadratic_results_are_consistent(label, d):
    E = curve(label)
    K = NumberField(RatPoly([-d, 0, 1]))
    T = torsion_over_K(E, K)
    base = torsion_over_Q(E).structure
    # monotone, within the bound, and the Weil pairing puts mu_m inside K
    assert T.structure.contains(base)
    assert torsion_bound(E, K) % T.structure.order == 0
    if T.structure.m > 1:
        cyclo = {2: RatPoly([1, 1]), 3: RatPoly([1, 1, 1]), 4: RatPoly([1, 0, 1]), 6: RatPoly([1, -1, 1])}
        assert has_root_in(cyclo[T.structure.m], K)
    check_generators(T)


@pytest.mark.slow
def test_table4_results_lie_in_the_classification():
    for r in expected_rows("table4"):
        T = torsion_over_K(curve(r.label), NumberField(RatPoly(list(r.field))))
        assert in_phi_star6(T.structure) or T.structure == S("4,12")
