"""The complement-arithmetic laws, quantified over all corpus rings of order <= 32.

These are the element-level facts the classification layer leans on; each
test is an exhaustive sweep, not a sampled property.
"""

from ringlab import elements, flags, spectrum


def _tables(ring):
    return ring.mul.tolist(), ring.add.tolist()


def _pair_checker(ring):
    mul, add = _tables(ring)
    reg = flags.regular_mask(ring)
    zero = ring.zero

    def is_pair(a, b):
        return mul[a][b] == zero and (reg >> add[a][b]) & 1

    return is_pair


def test_nilpotent_complemented_only_at_zero(small_rings):
    for ring in small_rings:
        comp = elements.complemented_mask(ring)
        for x in flags.bits(flags.nilpotent_mask(ring)):
            assert ((comp >> x) & 1) == (x == ring.zero), (ring.label, x)


def test_regular_plus_minus_nilpotent_is_regular(small_rings):
    for ring in small_rings:
        mul, add = _tables(ring)
        reg = flags.regular_mask(ring)
        neg = ring.neg.tolist()
        nilpotents = list(flags.bits(flags.nilpotent_mask(ring)))
        for r in flags.bits(reg):
            row = add[r]
            for x in nilpotents:
                assert (reg >> row[x]) & 1, (ring.label, r, x, "sum")
                assert (reg >> row[neg[x]]) & 1, (ring.label, r, x, "difference")


def test_regular_scaling_preserves_pairs_both_ways(small_rings):
    # b complements x if and only if b complements s*x, for every regular s
    for ring in small_rings:
        mul, _ = _tables(ring)
        is_pair = _pair_checker(ring)
        n = ring.order
        for s in flags.bits(flags.regular_mask(ring)):
            srow = mul[s]
            for x in range(n):
                sx = srow[x]
                for b in range(n):
                    assert is_pair(x, b) == is_pair(sx, b), (ring.label, s, x, b)


def test_common_complement_passes_to_products(small_rings):
    for ring in small_rings:
        mul, _ = _tables(ring)
        is_pair = _pair_checker(ring)
        n = ring.order
        for b in range(n):
            holders = [a for a in range(n) if is_pair(a, b)]
            for a in holders:
                row = mul[a]
                for a2 in holders:
                    assert is_pair(row[a2], b), (ring.label, a, a2, b)


def test_powers_of_pairs_are_pairs(small_rings):
    for ring in small_rings:
        is_pair = _pair_checker(ring)
        n = ring.order
        for a in range(n):
            for b in range(n):
                if not is_pair(a, b):
                    continue
                for e_a in range(1, 5):
                    for e_b in range(1, 5):
                        assert is_pair(ring.power(a, e_a), ring.power(b, e_b)), (
                            ring.label,
                            a,
                            b,
                            e_a,
                            e_b,
                        )


def test_nilpotent_perturbation_of_complemented_forces_zero(small_rings):
    # b complements a, b*b' nilpotent, a + b*b' complemented  =>  b*b' = 0
    for ring in small_rings:
        mul, add = _tables(ring)
        is_pair = _pair_checker(ring)
        nil = flags.nilpotent_mask(ring)
        comp = elements.complemented_mask(ring)
        n = ring.order
        for a in range(n):
            for b in range(n):
                if not is_pair(a, b):
                    continue
                brow = mul[b]
                arow = add[a]
                for b2 in range(n):
                    bb = brow[b2]
                    if (nil >> bb) & 1 and (comp >> arow[bb]) & 1:
                        assert bb == ring.zero, (ring.label, a, b, b2)


def test_vn_regular_elements_have_canonical_complement(small_rings):
    # from x^2 a = x, the element 1 - a*x complements x
    for ring in small_rings:
        mul, add = _tables(ring)
        is_pair = _pair_checker(ring)
        neg = ring.neg.tolist()
        for x, a in enumerate(flags.vn_witnesses(ring)):
            if a is None:
                continue
            partner = add[ring.one][neg[mul[a][x]]]
            assert is_pair(x, partner), (ring.label, x, a)


def test_pi_complement_single_witness_characterization(small_rings):
    # a power of x is complemented  <=>  some b has x*b nilpotent, x + b regular
    for ring in small_rings:
        single = elements.pi_complemented_mask(ring)
        for x in range(ring.order):
            power_form = elements.find_pi_complement(ring, x) is not None
            assert power_form == bool((single >> x) & 1), (ring.label, x)


def test_rough_complement_of_nilpotents_is_eta_membership(small_rings):
    for ring in small_rings:
        rough = elements.roughly_complemented_mask(ring)
        eta = spectrum.eta_ideal(ring).members
        for x in flags.bits(flags.nilpotent_mask(ring)):
            assert bool((rough >> x) & 1) == bool((eta >> x) & 1), (ring.label, x)


def test_rough_pairs_scale_by_aregular_elements(small_rings):
    for ring in small_rings:
        mul, add = _tables(ring)
        areg = flags.aregular_mask(ring)
        zero = ring.zero
        n = ring.order
        rough_pairs = [
            (a, b)
            for a in range(n)
            for b in range(n)
            if mul[a][b] == zero and (areg >> add[a][b]) & 1
        ]
        for s in flags.bits(areg):
            srow = mul[s]
            for a, b in rough_pairs:
                sb = srow[b]
                assert mul[a][sb] == zero and (areg >> add[a][sb]) & 1, (
                    ring.label,
                    a,
                    b,
                    s,
                )


def test_finite_collapse_regular_unit_aregular(small_rings):
    for ring in small_rings:
        reg = flags.regular_mask(ring)
        assert reg == flags.unit_mask(ring), ring.label
        assert reg == flags.aregular_mask(ring), ring.label
