"""Ring construction, canonical element order, and axiom validation."""

import itertools

import numpy as np
import pytest

from ringlab import core
from ringlab.core import (
    CapExceededError,
    ConstructionError,
    FiniteRing,
    construct_poly_trunc,
    construct_product,
    construct_quotient,
    construct_trivial_extension,
    construct_zn,
    module_over_zn,
    validate_ring_axioms,
)


def ring_hom_bijection(src, dst, fn):
    """Check that fn is a ring isomorphism src -> dst (independent oracle)."""
    image = [fn(x) for x in range(src.order)]
    if sorted(image) != list(range(dst.order)):
        return False
    if fn(src.zero) != dst.zero or fn(src.one) != dst.one:
        return False
    for a in range(src.order):
        for b in range(src.order):
            if fn(int(src.add[a, b])) != int(dst.add[fn(a), fn(b)]):
                return False
            if fn(int(src.mul[a, b])) != int(dst.mul[fn(a), fn(b)]):
                return False
    return True


def exists_isomorphism(a, b):
    """Brute-force isomorphism search; only viable for tiny orders."""
    if a.order != b.order:
        return False
    ids = list(range(a.order))
    for perm in itertools.permutations(ids):
        if perm[a.zero] != b.zero or perm[a.one] != b.one:
            continue
        if ring_hom_bijection(a, b, lambda x: perm[x]):
            return True
    return False


class TestZn:
    def test_z12_canonical(self):
        r = construct_zn(12)
        assert r.order == 12
        assert r.one == 1
        assert r.names == tuple(str(i) for i in range(12))

    def test_z4_nilradical_by_direct_square(self):
        r = construct_zn(4)
        nil = [x for x in range(4) if any(pow(x, k, 4) == 0 for k in range(1, 5))]
        assert nil == [0, 2]
        assert int(r.mul[2, 2]) == 0

    def test_z1_rejected(self):
        with pytest.raises(ConstructionError):
            construct_zn(1)
        with pytest.raises(ConstructionError):
            construct_zn(0)

    def test_arithmetic_matches_integers(self):
        r = construct_zn(9)
        for a in range(9):
            for b in range(9):
                assert int(r.add[a, b]) == (a + b) % 9
                assert int(r.mul[a, b]) == (a * b) % 9
        assert all(int(r.neg[a]) == (-a) % 9 for a in range(9))

    def test_cap(self):
        with pytest.raises(CapExceededError):
            construct_zn(100, max_order=64)


class TestProduct:
    def test_crt_isomorphism_with_z12(self):
        p = construct_product([construct_zn(3), construct_zn(4)])
        z12 = construct_zn(12)
        assert p.order == 12
        # explicit Chinese-remainder map x -> (x mod 3, x mod 4), index = 4*(x%3) + (x%4)
        assert ring_hom_bijection(z12, p, lambda x: 4 * (x % 3) + (x % 4))

    def test_singleton_product_equals_factor(self):
        z2 = construct_zn(2)
        p = construct_product([z2])
        assert p.order == 2
        assert np.array_equal(p.add, z2.add)
        assert np.array_equal(p.mul, z2.mul)

    def test_nilradical_size_of_z4_squared(self):
        p = construct_product([construct_zn(4), construct_zn(4)])
        assert p.order == 16
        # direct check: (a, b) nilpotent iff both coordinates are in {0, 2}
        nil = [
            e
            for e in range(16)
            if any(_pow_in(p, e, k) == p.zero for k in range(1, 6))
        ]
        assert len(nil) == 4

    def test_empty_rejected(self):
        with pytest.raises(ConstructionError):
            construct_product([])

    def test_factors_recorded(self):
        z3, z4 = construct_zn(3), construct_zn(4)
        p = construct_product([z3, z4])
        assert p.factor_rings == (z3, z4)


def _pow_in(ring, x, k):
    acc = ring.one
    for _ in range(k):
        acc = int(ring.mul[acc, x])
    return acc


class TestQuotient:
    def test_z12_mod_nilradical_is_z6(self):
        z12 = construct_zn(12)
        q = construct_quotient(z12, [0, 6])
        z6 = construct_zn(6)
        assert q.order == 6
        # least-representative order makes the coset map the identity on 0..5
        assert ring_hom_bijection(q, z6, lambda x: x)
        assert q.coset_reps == (0, 1, 2, 3, 4, 5)

    def test_zero_ideal_gives_same_tables(self):
        z4 = construct_zn(4)
        q = construct_quotient(z4, [0])
        assert q.order == 4
        assert np.array_equal(q.add, z4.add)
        assert np.array_equal(q.mul, z4.mul)

    def test_z4_mod_two_is_z2(self):
        z4 = construct_zn(4)
        q = construct_quotient(z4, [0, 2])
        assert q.order == 2
        assert ring_hom_bijection(q, construct_zn(2), lambda x: x)

    def test_whole_ring_rejected(self):
        z4 = construct_zn(4)
        with pytest.raises(ConstructionError):
            construct_quotient(z4, [0, 1, 2, 3])

    def test_non_ideal_rejected(self):
        z12 = construct_zn(12)
        with pytest.raises(ConstructionError):
            construct_quotient(z12, [0, 5])  # not closed under addition
        with pytest.raises(ConstructionError):
            construct_quotient(z12, [1, 2])  # missing zero


class TestPolyTrunc:
    def test_z2_dual_numbers(self):
        t = construct_poly_trunc(construct_zn(2), 2)
        assert t.order == 4
        x = 2  # little-endian coefficients: index 2 = x
        assert t.names[x] == "x"
        assert int(t.mul[x, x]) == t.zero
        # characteristic 2, so not isomorphic to Z_4 (1 + 1 = 0 here)
        assert int(t.add[1, 1]) == 0
        assert not exists_isomorphism(t, construct_zn(4))

    def test_z3_nilradical_by_coefficients(self):
        t = construct_poly_trunc(construct_zn(3), 2)
        assert t.order == 9
        nil = [e for e in range(9) if any(_pow_in(t, e, k) == 0 for k in range(1, 10))]
        # multiples of x: indices 3 (x) and 6 (2x), plus 0
        assert nil == [0, 3, 6]

    def test_k1_rejected(self):
        with pytest.raises(ConstructionError):
            construct_poly_trunc(construct_zn(2), 1)

    def test_base_embeds_at_low_indices(self):
        z4 = construct_zn(4)
        t = construct_poly_trunc(z4, 3)
        for a in range(4):
            for b in range(4):
                assert int(t.add[a, b]) == int(z4.add[a, b])
                assert int(t.mul[a, b]) == int(z4.mul[a, b])


class TestTrivialExtension:
    def test_z3_on_itself(self):
        z3 = construct_zn(3)
        t = construct_trivial_extension(z3, module_over_zn(z3, [3]))
        assert t.order == 9
        # (0, m) squares to zero for every m
        for m in range(3):
            e = 0 * 3 + m
            assert int(t.mul[e, e]) == t.zero

    def test_trivial_module_is_base(self):
        z2 = construct_zn(2)
        t = construct_trivial_extension(z2, module_over_zn(z2, [1]))
        assert t.order == 2
        assert ring_hom_bijection(t, z2, lambda x: x)

    def test_z9_on_z3_order(self):
        z9 = construct_zn(9)
        t = construct_trivial_extension(z9, module_over_zn(z9, [3]))
        assert t.order == 27

    def test_multiplication_rule(self):
        z4 = construct_zn(4)
        t = construct_trivial_extension(z4, module_over_zn(z4, [2]))
        # (r, m)(s, u) = (rs, ru + sm); indices are r*2 + m
        for r in range(4):
            for m in range(2):
                for s in range(4):
                    for u in range(2):
                        got = int(t.mul[r * 2 + m, s * 2 + u])
                        want = ((r * s) % 4) * 2 + ((r * u + s * m) % 2)
                        assert got == want

    def test_bad_action_rejected(self):
        z4 = construct_zn(4)
        action = np.zeros((4, 3), dtype=np.int64)  # constant action violates identity
        spec = core.ModuleSpec([3], action)
        with pytest.raises(ConstructionError, match="identity"):
            construct_trivial_extension(z4, spec)

    def test_incompatible_modulus_rejected(self):
        z4 = construct_zn(4)
        with pytest.raises(ConstructionError):
            module_over_zn(z4, [3])


class TestValidation:
    def test_constructed_rings_validate_clean(self, default_rings):
        for _, ring in default_rings:
            assert validate_ring_axioms(ring) == [], ring.label

    def test_commutativity_violation_detected(self):
        z6 = construct_zn(6)
        bad = np.array(z6.mul).copy()
        bad[2, 3] = 5  # 3*2 stays 0, 2*3 becomes 5
        r = FiniteRing(6, 0, 1, z6.add, bad, z6.neg, "broken")
        axioms = {v.axiom for v in validate_ring_axioms(r)}
        assert "mul-commutativity" in axioms
        first = next(v for v in validate_ring_axioms(r) if v.axiom == "mul-commutativity")
        assert first.witness == (2, 3)

    def test_identity_violation_detected(self):
        z4 = construct_zn(4)
        r = FiniteRing(4, 0, 3, z4.add, z4.mul, z4.neg, "wrong-one")
        axioms = {v.axiom for v in validate_ring_axioms(r)}
        assert "mul-identity" in axioms

    def test_out_of_range_short_circuits(self):
        z4 = construct_zn(4)
        bad = np.array(z4.add).copy()
        bad[1, 1] = 99
        r = FiniteRing(4, 0, 1, bad, z4.mul, z4.neg, "corrupt")
        violations = validate_ring_axioms(r)
        assert violations[0].axiom == "add-entry-out-of-range"
        assert violations[0].witness == (1, 1)
