"""Ring-level verdicts, the implication hierarchy, and theorem verification."""

import json

from ringlab import elements, flags, spectrum
from ringlab.classify import (
    PREDICATES,
    aregular_quotient,
    classical_quotient,
    classify_ring,
    verify_hierarchy,
    verify_theorems,
)
from ringlab.core import construct_product, construct_zn


def values(report):
    return {p: report.value(p) for p in PREDICATES}


class TestClassifyExamples:
    def test_z12(self):
        v = values(classify_ring(construct_zn(12)))
        assert v["reduced"] is False
        assert v["semi_complemented"] is False
        assert v["almost_complemented"] is True
        assert v["pi_complemented"] is True
        assert v["roughly_complemented"] is False
        r = classify_ring(construct_zn(12))
        assert r.verdicts["semi_complemented"].counterexample == 2

    def test_z4(self):
        v = values(classify_ring(construct_zn(4)))
        assert v["property_D"] is True
        assert v["unique_prime"] is True
        assert v["semi_complemented"] is True
        assert v["complemented"] is False
        assert v["local"] is True

    def test_z6(self):
        v = values(classify_ring(construct_zn(6)))
        assert v["reduced"] is True
        assert v["vnr"] is True
        assert v["complemented"] is True
        assert v["property_D"] is False

    def test_never_unknown_on_finite_rings(self, default_rings):
        for _, ring in default_rings:
            for p in PREDICATES:
                assert classify_ring(ring).value(p) in (True, False), (ring.label, p)

    def test_min_compact_constant_with_note(self, small_rings):
        for ring in small_rings[:10]:
            verdict = classify_ring(ring).verdicts["min_compact"]
            assert verdict.value is True
            assert "finite" in verdict.provenance


class TestHierarchy:
    def test_examples(self):
        assert verify_hierarchy(construct_zn(12)) == []
        assert verify_hierarchy(construct_zn(4)) == []
        assert verify_hierarchy(construct_zn(7)) == []

    def test_full_corpus_clean(self, default_rings):
        for _, ring in default_rings:
            assert verify_hierarchy(ring) == [], ring.label


class TestTheorems:
    def test_z12_main_instance(self):
        report = verify_theorems(construct_zn(12))
        main = next(c for c in report.checks if c.name == "semi_complemented_dichotomy")
        assert main.passed

    def test_z4_quotient_conditions(self):
        report = verify_theorems(construct_zn(4))
        pi = next(c for c in report.checks if c.name == "pi_complemented_equivalences")
        assert pi.passed

    def test_z6_reduced_criteria(self):
        report = verify_theorems(construct_zn(6))
        crit = next(c for c in report.checks if c.name == "complemented_criteria_reduced")
        assert crit.passed and not crit.skipped

    def test_z4_reduced_criteria_skipped_with_note(self):
        report = verify_theorems(construct_zn(4))
        crit = next(c for c in report.checks if c.name == "complemented_criteria_reduced")
        assert crit.skipped
        # the counterpoint recorded on the classification report
        assert any("reduced rings only" in n for n in classify_ring(construct_zn(4)).notes)

    def test_all_pass_on_corpus(self, default_rings):
        for _, ring in default_rings:
            report = verify_theorems(ring)
            assert report.all_passed, (ring.label, report.failures())


class TestFiniteCollapseLaws:
    def test_always_true_predicates(self, default_rings):
        for _, ring in default_rings:
            v = values(classify_ring(ring))
            assert v["almost_complemented"] is True, ring.label
            assert v["pi_complemented"] is True, ring.label
            assert v["nearly_reduced"] is True, ring.label
            assert v["zero_dimensional"] is True, ring.label

    def test_rough_reduced_complemented_coincide(self, default_rings):
        for _, ring in default_rings:
            v = values(classify_ring(ring))
            assert v["roughly_complemented"] == v["reduced"] == v["complemented"], ring.label


class TestClassicalQuotient:
    def test_q_is_identity_on_finite_rings(self, small_rings):
        for ring in small_rings[:30]:
            assert classical_quotient(ring) is ring

    def test_z12_regulars_are_units(self):
        z12 = construct_zn(12)
        assert flags.regular_mask(z12) == flags.mask_of([1, 5, 7, 11])
        assert classical_quotient(z12) is z12

    def test_qa_of_z4(self):
        qa = aregular_quotient(construct_zn(4))
        assert qa.order == 4

    def test_q_invariance_of_verdicts(self, small_rings):
        for ring in small_rings[:30]:
            v = values(classify_ring(ring))
            qv = values(classify_ring(classical_quotient(ring)))
            for p in ("semi_complemented", "almost_complemented", "roughly_complemented"):
                assert v[p] == qv[p], (ring.label, p)


class TestProductLaws:
    def test_pi_and_nearly_reduced_conjunctive(self):
        bases = [construct_zn(n) for n in (4, 9, 6, 8)]
        for a in bases:
            for b in bases:
                prod = construct_product([a, b])
                pv = values(classify_ring(prod))
                av, bv = values(classify_ring(a)), values(classify_ring(b))
                assert pv["pi_complemented"] == (av["pi_complemented"] and bv["pi_complemented"])
                assert pv["nearly_reduced"] == (av["nearly_reduced"] and bv["nearly_reduced"])

    def test_nilradical_of_product_is_product_of_nilradicals(self):
        bases = [construct_zn(n) for n in (4, 9, 6, 8)]
        for a in bases:
            for b in bases:
                prod = construct_product([a, b])
                got = spectrum.nilradical(prod).members
                want = 0
                for x in spectrum.nilradical(a).elements():
                    for y in spectrum.nilradical(b).elements():
                        want |= 1 << (x * b.order + y)
                assert got == want, (a.label, b.label)

    def test_aregulars_of_product_componentwise(self):
        bases = [construct_zn(n) for n in (4, 9, 6, 8)]
        for a in bases:
            for b in bases:
                prod = construct_product([a, b])
                got = flags.aregular_mask(prod)
                want = 0
                for x in flags.bits(flags.aregular_mask(a)):
                    for y in flags.bits(flags.aregular_mask(b)):
                        want |= 1 << (x * b.order + y)
                assert got == want, (a.label, b.label)


class TestReportSerialization:
    def test_json_is_stable_and_ordered(self):
        ring = construct_zn(12)
        report = classify_ring(ring)
        text1 = report.to_json(ring)
        text2 = classify_ring(construct_zn(12)).to_json(construct_zn(12))
        assert text1 == text2
        data = json.loads(text1)
        assert list(data["verdicts"]) == list(PREDICATES)
        assert data["verdicts"]["semi_complemented"]["value"] is False
        assert data["verdicts"]["semi_complemented"]["counterexample"]["element"] == 2
