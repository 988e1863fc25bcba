from collections import Counter

import pytest

from conftest import curve, expected_rows, sextic_config
from sextor.algebra.poly import RatPoly
from sextor.curves import curve_create
from sextor.errors import RuleViolation
from sextor.growth import (GrowthConfiguration, GrowthEntry, candidate_fields, h_statistic,
                           torsion_configurations, torsion_point_fields, validate_configuration)
from sextor.numfield import NumberField, compositum, field_from_coeffs, is_isomorphic, is_subfield
from sextor.structure import S
from sextor.torsion import torsion_over_K, torsion_over_Q

QUICK = ("11a1", "11a2", "26b1", "50a3", "50b1")


def has_field(fields, K):
    return any(is_isomorphic(F, K) for F in fields)


class TestPointFields:
    def test_11a1(self):
        pts = torsion_point_fields(curve("11a1"), 6)
        kinds = {(pf.order, pf.field.degree) for pf in pts}
        assert (5, 1) in kinds and (2, 3) in kinds

    def test_full_rational_two_torsion(self):
        E = curve_create(0, 0, 0, -1, 0)
        assert not [pf for pf in torsion_point_fields(E, 6) if pf.order == 2 and pf.field.degree > 1]

    def test_witness_points(self):
        for pf in torsion_point_fields(curve("50a3"), 6):
            P = pf.point
            assert (pf.order * P).is_zero()
            assert 6 % pf.field.degree == 0

    def test_50a4_sextic(self):
        # orders are prime powers; the order-15 field is the compositum of a 3- and a 5-point field
        X6_5 = field_from_coeffs("-5,0,0,0,0,0,1")
        E = curve("50a4")
        pts = torsion_point_fields(E, 6)
        three = [pf.field for pf in pts if pf.order == 3 and pf.field.degree == 3]
        five = [pf.field for pf in pts if pf.order == 5 and pf.field.degree == 2]
        K = compositum(five[0], three[0])
        assert is_isomorphic(K, X6_5)
        assert torsion_over_K(E, K).structure == S(15)


class TestCandidateFields:
    def test_50a3(self):
        fields = candidate_fields(curve("50a3"), 6)
        cubic = NumberField(RatPoly([2, 2, -1, 1]))
        q5 = NumberField(RatPoly([-5, 0, 1]))
        assert has_field(fields, q5) and has_field(fields, cubic)
        assert has_field(fields, compositum(q5, cubic))
        assert all(K.degree > 1 for K in fields)

    def test_26b1(self):
        fields = candidate_fields(curve("26b1"), 6)
        cubics = [K for K in fields if K.degree == 3]
        assert cubics
        assert any(K.degree == 6 and is_subfield(cubics[0], K) for K in fields)

    def test_no_duplicates(self):
        fields = candidate_fields(curve("50a3"), 6)
        for i, K in enumerate(fields):
            for L in fields[i + 1:]:
                assert not is_isomorphic(K, L)


class TestConfigurations:
    def test_11a2(self):
        assert Counter(sextic_config("11a2").labels()) == Counter(["2", "2,2"])

    def test_50a3(self):
        assert Counter(sextic_config("50a3").labels()) == Counter(["6", "15", "30", "2,6", "3,3"])

    def test_50b1_repeated_structure(self):
        cfg = sextic_config("50b1")
        assert Counter(cfg.labels()) == Counter(["10", "15", "15", "30", "2,10"])
        f15 = [e.field for e in cfg.entries if e.structure == S(15)]
        assert not is_isomorphic(*f15)
        assert any(is_isomorphic(K, NumberField(RatPoly([-5, 0, 1]))) for K in f15)

    def test_two_eight_base_has_no_growth(self):
        # Cremona 210e2, torsion (2,8)
        E = curve_create(1, 0, 0, -1070, 7812)
        assert torsion_over_Q(E).structure == S("2,8")
        assert len(torsion_configurations(E, 6)) == 0

    @pytest.mark.parametrize("label", QUICK)
    def test_entry_invariants(self, label):
        E = curve(label)
        cfg = sextic_config(label)
        assert cfg.base == torsion_over_Q(E).structure
        for i, e in enumerate(cfg.entries):
            assert e.structure.properly_contains(cfg.base)
            assert e.primitive
            assert torsion_over_K(E, e.field).structure == e.structure
            for f in cfg.entries[i + 1:]:
                assert not is_isomorphic(e.field, f.field)

    @pytest.mark.parametrize("label", QUICK)
    def test_lower_degrees_agree(self, label):
        full = sextic_config(label)
        for d in (2, 3):
            low = torsion_configurations(curve(label), d)
            want = sorted(str(e.structure) for e in full.entries if e.field.degree == d)
            assert sorted(low.labels()) == want

    def test_byte_stable_ordering(self):
        a = torsion_configurations(curve("50a4"), 6)
        b = torsion_configurations(curve("50a4"), 6)
        assert [(str(e.structure), e.field.defining_poly.coeffs) for e in a.entries] == \
               [(str(e.structure), e.field.defining_poly.coeffs) for e in b.entries]
        keys = [(e.structure.order, e.field.degree) for e in a.entries]
        assert [k[0] for k in keys] == sorted(k[0] for k in keys)


class TestHStatistic:
    def test_examples(self):
        assert h_statistic([]) == 0
        assert h_statistic([sextic_config("11a2")]) == 2
        assert h_statistic([sextic_config(lab) for lab in ("11a2", "50a3", "50a4")]) == 9


class TestValidation:
    def test_50a3_passes(self):
        results = validate_configuration(curve("50a3"), sextic_config("50a3"))
        assert results and all(r.passed is not False for r in results)
        assert any(r.rule_id == "labels-for-30" and r.passed for r in results)

    def test_order_twenty(self):
        E = curve("11a1")
        K = NumberField(RatPoly([-5, 0, 1]))
        cfg = GrowthConfiguration(S(5), 6, [GrowthEntry(S(20), K)])
        with pytest.raises(RuleViolation) as info:
            validate_configuration(E, cfg)
        assert "phi-star-6" in info.value.rule_ids
        assert "noncm-not-20" in info.value.rule_ids

    def test_two_primary_dash(self):
        E = curve("17a1")
        K = NumberField(RatPoly([-2, 0, 1]))
        cfg = GrowthConfiguration(S(4), 6, [GrowthEntry(S(16), K)])
        with pytest.raises(RuleViolation) as info:
            validate_configuration(E, cfg)
        assert "noncm-two-primary" in info.value.rule_ids

    def test_no_raise_mode(self):
        E = curve("11a1")
        cfg = GrowthConfiguration(S(5), 6, [GrowthEntry(S(20), NumberField(RatPoly([-5, 0, 1])))])
        results = validate_configuration(E, cfg, raise_on_failure=False)
        assert any(r.passed is False for r in results)


def configuration_rows():
    return [r for r in expected_rows("table6") + expected_rows("derived") if r.is_configuration]


@pytest.mark.slow
def test_full_configuration_corpus():
    bad = []
    for r in configuration_rows():
        cfg = sextic_config(r.label)
        if Counter(cfg.labels()) != Counter(str(s) for s in r.structures):
            bad.append((r.label, cfg.labels(), r.structures))
        validate_configuration(curve(r.label), cfg)
    assert bad == []
