"""Ideals, annihilators, radicals, primes, and the ideal-theoretic ring conditions."""

import math

import pytest

from ringlab import flags, spectrum
from ringlab.core import CapExceededError, construct_product, construct_zn
from ringlab.spectrum import (
    annihilator,
    annihilator_condition_witness,
    enumerate_ideals,
    eta_ideal,
    has_annihilator_condition,
    has_property_A,
    ideal_generated,
    is_dense,
    jacobson_radical,
    nilradical,
    prime_spectrum,
)


def oracle_annihilator(ring, gens):
    """Direct table scan, independent of the mask machinery."""
    out = []
    for x in range(ring.order):
        if all(int(ring.mul[x, g]) == ring.zero for g in gens):
            out.append(x)
    return tuple(out)


def oracle_nilpotents(ring):
    out = []
    for x in range(ring.order):
        p = x
        for _ in range(ring.order + 1):
            if p == ring.zero:
                out.append(x)
                break
            p = int(ring.mul[p, x])
    return tuple(out)


class TestAnnihilator:
    def test_z12_examples(self):
        z12 = construct_zn(12)
        assert annihilator(z12, [2]).elements() == (0, 6)
        assert annihilator(z12, [2, 3]).elements() == (0,)
        assert annihilator(z12, [1]).elements() == (0,)

    def test_empty_generators_whole_ring(self):
        z6 = construct_zn(6)
        assert annihilator(z6, []).elements() == tuple(range(6))

    def test_matches_direct_scan(self, small_rings):
        for ring in small_rings[:40]:
            for g in range(0, ring.order, max(1, ring.order // 5)):
                assert annihilator(ring, [g]).elements() == oracle_annihilator(ring, [g])


class TestNilradical:
    def test_examples(self):
        assert nilradical(construct_zn(12)).elements() == (0, 6)
        assert nilradical(construct_zn(6)).elements() == (0,)

    def test_matches_direct_power_scan(self, small_rings):
        for ring in small_rings:
            assert nilradical(ring).elements() == oracle_nilpotents(ring), ring.label


class TestIdealLattice:
    def test_z12_has_divisor_lattice(self):
        z12 = construct_zn(12)
        ideals = enumerate_ideals(z12)
        divisors = [d for d in range(1, 13) if 12 % d == 0]
        assert len(ideals) == len(divisors) == 6
        masks = {i.members for i in ideals}
        for d in divisors:
            gen_mask = flags.mask_of(range(0, 12, d) if d < 12 else [0])
            assert gen_mask in masks

    def test_field_has_two_ideals(self):
        for p in (2, 3, 5, 7, 11, 13):
            assert len(enumerate_ideals(construct_zn(p))) == 2

    def test_z2xz2_has_four(self):
        r = construct_product([construct_zn(2), construct_zn(2)])
        assert len(enumerate_ideals(r)) == 4

    def test_all_enumerated_sets_are_ideals(self, small_rings):
        for ring in small_rings[:30]:
            for ideal in enumerate_ideals(ring):
                members = ideal.elements()
                assert ring.zero in members
                for x in members:
                    for y in members:
                        assert ideal.contains(int(ring.add[x, y]))
                for r in range(ring.order):
                    for x in members:
                        assert ideal.contains(int(ring.mul[r, x]))

    def test_double_annihilator_contains_ideal(self, small_rings):
        for ring in small_rings[:30]:
            for ideal in enumerate_ideals(ring):
                double = annihilator(ring, annihilator(ring, ideal))
                assert ideal.members & double.members == ideal.members

    def test_cap_enforced(self):
        z = construct_zn(64)
        with pytest.raises(CapExceededError):
            enumerate_ideals(z, cap=32)


class TestPrimeSpectrum:
    def test_z12_primes(self):
        report = prime_spectrum(construct_zn(12))
        prime_sets = [p.elements() for p in report.primes]
        assert (0, 3, 6, 9) in prime_sets
        assert (0, 2, 4, 6, 8, 10) in prime_sets
        assert len(report.primes) == 2
        assert all(report.minimal_flags) and all(report.maximal_flags)

    def test_z4_local(self):
        report = prime_spectrum(construct_zn(4))
        assert [p.elements() for p in report.primes] == [(0, 2)]

    def test_field_spectrum_is_zero(self):
        report = prime_spectrum(construct_zn(7))
        assert [p.elements() for p in report.primes] == [(0,)]

    def test_nilradical_is_intersection_of_minimal_primes(self, small_rings):
        for ring in small_rings:
            report = prime_spectrum(ring)
            acc = (1 << ring.order) - 1
            for p in report.minimal_primes():
                acc &= p.members
            assert acc == nilradical(ring).members, ring.label

    def test_finite_primes_both_minimal_and_maximal(self, small_rings):
        for ring in small_rings:
            report = prime_spectrum(ring)
            assert all(report.minimal_flags), ring.label
            assert all(report.maximal_flags), ring.label

    def test_primality_oracle(self, small_rings):
        # complement multiplicatively closed, checked with raw loops
        for ring in small_rings[:25]:
            for p in prime_spectrum(ring).primes:
                outside = [x for x in range(ring.order) if not p.contains(x)]
                assert ring.one in outside
                for x in outside:
                    for y in outside:
                        assert not p.contains(int(ring.mul[x, y]))


class TestJacobson:
    def test_examples(self):
        assert jacobson_radical(construct_zn(12)).elements() == (0, 6)
        assert jacobson_radical(construct_zn(4)).elements() == (0, 2)
        assert jacobson_radical(construct_zn(6)).elements() == (0,)

    def test_equals_nilradical_on_finite_rings(self, small_rings):
        for ring in small_rings:
            assert jacobson_radical(ring).members == nilradical(ring).members


class TestEta:
    def test_examples(self):
        assert eta_ideal(construct_zn(4)).elements() == (0,)
        assert eta_ideal(construct_zn(12)).elements() == (0,)
        assert eta_ideal(construct_zn(7)).elements() == (0,)

    def test_contained_in_nilradical(self, small_rings):
        for ring in small_rings:
            eta = eta_ideal(ring).members
            assert eta & nilradical(ring).members == eta


class TestDensityAndConditions:
    def test_is_dense_examples(self):
        z12 = construct_zn(12)
        assert not is_dense(z12, ideal_generated(z12, [2]))
        assert is_dense(z12, ideal_generated(z12, [1]))
        z6 = construct_zn(6)
        assert not is_dense(z6, ideal_generated(z6, [2]))

    def test_property_a_examples(self):
        assert has_property_A(construct_zn(4))
        assert has_property_A(construct_zn(12))
        assert has_property_A(construct_zn(7))

    def test_annihilator_condition_examples(self):
        z12 = construct_zn(12)
        assert has_annihilator_condition(z12)
        assert annihilator_condition_witness(z12, 2, 3) == 1
        assert has_annihilator_condition(construct_zn(4))

    def test_pair_with_itself_always_witnessed(self, small_rings):
        for ring in small_rings[:20]:
            for a in range(ring.order):
                c = annihilator_condition_witness(ring, a, a)
                assert c is not None
                assert annihilator(ring, [c]).members == annihilator(ring, [a]).members

    def test_quotient_by_nilradical_is_reduced(self, small_rings):
        from ringlab.core import construct_quotient

        for ring in small_rings[:40]:
            q = construct_quotient(ring, nilradical(ring))
            assert nilradical(q).elements() == (q.zero,), ring.label
