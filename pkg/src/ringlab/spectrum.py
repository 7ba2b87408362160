"""Ideals, annihilators, radicals and the prime spectrum of a finite ring.

Ideals are bitmasks over the element universe.  The full ideal lattice is
the closure of the principal ideals under pairwise ideal sum; since every
ideal of a finite ring is the sum of its principal subideals, the closure is
complete.  Enumeration is refused above a configurable cap because lattices
of highly decomposable rings grow combinatorially.
"""

from __future__ import annotations

from dataclasses import dataclass

from ringlab import flags, kernels
from ringlab.core import CapExceededError, FiniteRing

DEFAULT_ENUM_CAP = 256


@dataclass(frozen=True)
class Ideal:
    """A two-sided ideal of a FiniteRing, stored as a member bitmask."""

    ring: FiniteRing
    members: int

    @property
    def size(self) -> int:
        return self.members.bit_count()

    def contains(self, x: int) -> bool:
        return bool((self.members >> x) & 1)

    def elements(self) -> tuple[int, ...]:
        return tuple(flags.bits(self.members))

    def is_proper(self) -> bool:
        return self.members != (1 << self.ring.order) - 1

    def __repr__(self):
        inner = ",".join(self.ring.names[i] for i in self.elements())
        return f"Ideal({{{inner}}} of {self.ring.label})"


@dataclass(frozen=True)
class SpectrumReport:
    """Prime ideals with minimality/maximality flags (by inclusion among primes)."""

    primes: tuple[Ideal, ...]
    minimal_flags: tuple[bool, ...]
    maximal_flags: tuple[bool, ...]

    def minimal_primes(self) -> tuple[Ideal, ...]:
        return tuple(p for p, f in zip(self.primes, self.minimal_flags) if f)

    def maximal_primes(self) -> tuple[Ideal, ...]:
        return tuple(p for p, f in zip(self.primes, self.maximal_flags) if f)


def _as_gen_ids(ring: FiniteRing, gens) -> list[int]:
    if isinstance(gens, Ideal):
        return list(gens.elements())
    if isinstance(gens, int):
        return list(flags.bits(gens))
    return [int(g) for g in gens]


def principal_ideal(ring: FiniteRing, g: int) -> Ideal:
    """(g) = R*g; already closed under addition since r*g + s*g = (r+s)*g."""
    mask = flags.mask_of(set(ring.mul[g].tolist()))
    return Ideal(ring, mask)


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    mask = kernels.subgroup_sum(a.ring.add, a.members, b.members, a.ring.order)
    return Ideal(a.ring, mask)


def ideal_generated(ring: FiniteRing, gens) -> Ideal:
    """The ideal generated by a set of elements (the zero ideal for no generators)."""
    acc = Ideal(ring, 1 << ring.zero)
    for g in _as_gen_ids(ring, gens):
        acc = ideal_sum(acc, principal_ideal(ring, g))
    return acc


def annihilator(ring: FiniteRing, gens) -> Ideal:
    """Ann(S) = {x : x*s = 0 for all s in S}; the whole ring when S is empty.

    Annihilating a generating set annihilates the ideal it generates, so this
    is also the annihilator of the generated (or spanned) ideal.
    """
    ids = _as_gen_ids(ring, gens)
    if not ids:
        return Ideal(ring, (1 << ring.order) - 1)
    masks = flags.ann_masks(ring)
    acc = masks[ids[0]]
    for g in ids[1:]:
        acc &= masks[g]
    return Ideal(ring, acc)


def nilradical(ring: FiniteRing) -> Ideal:
    """N(R): all nilpotent elements, found by iterating powers with cycle detection."""
    return Ideal(ring, flags.nilpotent_mask(ring))


def enumerate_ideals(ring: FiniteRing, cap: int = DEFAULT_ENUM_CAP) -> tuple[Ideal, ...]:
    """The complete ideal lattice, ordered by (size, member mask)."""
    if ring.order > cap:
        raise CapExceededError(
            f"ideal enumeration refused: order {ring.order} exceeds the enumeration cap {cap}"
        )

    def build():
        principal = {principal_ideal(ring, g).members for g in range(ring.order)}
        known = set(principal)
        frontier = set(principal)
        while frontier:
            fresh = set()
            for a in frontier:
                for b in principal:
                    s = kernels.subgroup_sum(ring.add, a, b, ring.order)
                    if s not in known:
                        known.add(s)
                        fresh.add(s)
            frontier = fresh
        return tuple(
            Ideal(ring, m) for m in sorted(known, key=lambda m: (m.bit_count(), m))
        )

    return ring.memo(("ideals", cap), build)


def _is_prime_mask(ring: FiniteRing, mask: int) -> bool:
    if mask == (1 << ring.order) - 1:
        return False
    outside = [x for x in range(ring.order) if not (mask >> x) & 1]
    mul = ring.mul
    for x in outside:
        row = mul[x].tolist()
        for y in outside:
            if (mask >> row[y]) & 1:
                return False
    return True


def prime_spectrum(ring: FiniteRing, cap: int = DEFAULT_ENUM_CAP) -> SpectrumReport:
    """Spec(R) with minimal/maximal flags; proper P with x,y outside P => xy outside P."""

    def build():
        primes = [i for i in enumerate_ideals(ring, cap) if _is_prime_mask(ring, i.members)]
        minimal = []
        maximal = []
        for p in primes:
            minimal.append(not any(q.members != p.members and q.members & p.members == q.members for q in primes))
            maximal.append(not any(q.members != p.members and q.members | p.members == q.members for q in primes))
        return SpectrumReport(tuple(primes), tuple(minimal), tuple(maximal))

    return ring.memo(("spectrum", cap), build)


def maximal_ideals(ring: FiniteRing, cap: int = DEFAULT_ENUM_CAP) -> tuple[Ideal, ...]:
    """Ideals maximal among the proper ideals of the lattice."""
    ideals = enumerate_ideals(ring, cap)
    proper = [i for i in ideals if i.is_proper()]
    out = []
    for i in proper:
        if not any(j.members != i.members and j.members | i.members == j.members for j in proper):
            out.append(i)
    return tuple(out)


def jacobson_radical(ring: FiniteRing, cap: int = DEFAULT_ENUM_CAP) -> Ideal:
    """J(R): intersection of the maximal ideals."""
    acc = (1 << ring.order) - 1
    for m in maximal_ideals(ring, cap):
        acc &= m.members
    return Ideal(ring, acc)


def eta_ideal(ring: FiniteRing) -> Ideal:
    """Union of the annihilators of all aregular elements.

    This is the kernel of the localization map at the aregular multiplicative
    set, and is always contained in the nilradical: an element killed by an
    aregular element is nilpotent.
    """

    def build():
        masks = flags.ann_masks(ring)
        acc = 0
        for s in flags.bits(flags.aregular_mask(ring)):
            acc |= masks[s]
        return acc

    return Ideal(ring, ring.memo("eta_mask", build))


def is_dense(ring: FiniteRing, ideal: Ideal) -> bool:
    """Dense = zero annihilator."""
    return annihilator(ring, ideal).members == 1 << ring.zero


def property_a_failure(ring: FiniteRing, cap: int = DEFAULT_ENUM_CAP) -> Ideal | None:
    """First dense ideal containing no regular element, or None.

    In a finite ring every ideal is finitely generated, so quantifying over
    the whole lattice decides the finitely-generated form of the property.
    """
    reg = flags.regular_mask(ring)
    for ideal in enumerate_ideals(ring, cap):
        if is_dense(ring, ideal) and not ideal.members & reg:
            return ideal
    return None


def has_property_A(ring: FiniteRing, cap: int = DEFAULT_ENUM_CAP) -> bool:
    """Every dense ideal contains a regular element."""
    return ring.memo(("property_A", cap), lambda: property_a_failure(ring, cap) is None)


def annihilator_condition_witness(ring: FiniteRing, a: int, b: int) -> int | None:
    """First c with Ann(a, b) = Ann(c), or None."""
    masks = flags.ann_masks(ring)
    target = masks[a] & masks[b]
    for c in range(ring.order):
        if masks[c] == target:
            return c
    return None


def annihilator_condition_failure(ring: FiniteRing) -> tuple[int, int] | None:
    """First pair (a, b) whose two-element annihilator is no single-element annihilator."""
    masks = flags.ann_masks(ring)
    singles = {}
    for c, m in enumerate(masks):
        singles.setdefault(m, c)
    for a in range(ring.order):
        ma = masks[a]
        for b in range(a, ring.order):
            if (ma & masks[b]) not in singles:
                return (a, b)
    return None


def has_annihilator_condition(ring: FiniteRing) -> bool:
    """For every pair (a, b) there is a c with Ann(a, b) = Ann(c)."""
    return ring.memo("annihilator_condition", lambda: annihilator_condition_failure(ring) is None)
