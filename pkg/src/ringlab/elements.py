"""Element-level predicates and complement-style witness searches.

All searches scan partner candidates in ascending element-id order and report
the first hit, so witness output is deterministic and reproducible.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from ringlab import flags, kernels
from ringlab.core import FiniteRing, InternalConsistencyError


class WitnessKind(enum.Enum):
    COMPLEMENT = "complement"
    PI_COMPLEMENT = "pi_complement"
    ALMOST_COMPLEMENT = "almost_complement"
    ROUGH_COMPLEMENT = "rough_complement"


@dataclass(frozen=True)
class Witness:
    """A partner b certifying one of the complement variants for an element x.

    complement:        x*b = 0          and x + b regular
    pi_complement(n):  x^n * b = 0      and x^n + b regular (least such n)
    almost_complement: x*b nilpotent    and x + b aregular
    rough_complement:  x*b = 0          and x + b aregular
    """

    partner: int
    kind: WitnessKind
    exponent: int | None = None


@dataclass(frozen=True)
class ElementProfile:
    element: int
    is_unit: bool
    is_regular: bool
    is_aregular: bool
    is_nilpotent: bool
    is_idempotent: bool
    is_vn_regular: bool
    is_pi_regular: bool
    nilpotency_index: int | None = None
    vn_witness: int | None = None
    pi_exponent: int | None = None


def profile_element(ring: FiniteRing, x: int) -> ElementProfile:
    """Exhaustively computed flags for a single element."""
    if not 0 <= x < ring.order:
        raise ValueError(f"element id {x} out of range for {ring.label}")
    vn = flags.vn_witnesses(ring)[x]
    pi = flags.pi_regular_exponents(ring)[x]
    return ElementProfile(
        element=x,
        is_unit=bool((flags.unit_mask(ring) >> x) & 1),
        is_regular=bool((flags.regular_mask(ring) >> x) & 1),
        is_aregular=bool((flags.aregular_mask(ring) >> x) & 1),
        is_nilpotent=bool((flags.nilpotent_mask(ring) >> x) & 1),
        is_idempotent=bool((flags.idempotent_mask(ring) >> x) & 1),
        is_vn_regular=vn is not None,
        is_pi_regular=pi is not None,
        nilpotency_index=flags.nilpotency_indices(ring)[x],
        vn_witness=vn,
        pi_exponent=pi,
    )


def _search(ring: FiniteRing, x: int, prod_ok: np.ndarray, sum_ok: np.ndarray) -> int:
    return int(kernels.find_partner(ring.mul[x], ring.add[x], prod_ok, sum_ok))


def find_complement(ring: FiniteRing, x: int) -> Witness | None:
    """First b with x*b = 0 and x + b regular."""
    b = _search(ring, x, flags.zero_only_u8(ring), flags.regular_u8(ring))
    return None if b < 0 else Witness(b, WitnessKind.COMPLEMENT)


def find_almost_complement(ring: FiniteRing, x: int) -> Witness | None:
    """First b with x*b nilpotent and x + b aregular."""
    b = _search(ring, x, flags.nilpotent_u8(ring), flags.aregular_u8(ring))
    return None if b < 0 else Witness(b, WitnessKind.ALMOST_COMPLEMENT)


def find_rough_complement(ring: FiniteRing, x: int) -> Witness | None:
    """First b with x*b = 0 and x + b aregular."""
    b = _search(ring, x, flags.zero_only_u8(ring), flags.aregular_u8(ring))
    return None if b < 0 else Witness(b, WitnessKind.ROUGH_COMPLEMENT)


def pi_complement_bound(ring: FiniteRing) -> int:
    """Exponent budget: nilpotency index of the nilradical plus the order."""
    indices = [k for k in flags.nilpotency_indices(ring) if k is not None]
    return (max(indices) if indices else 1) + ring.order


def find_pi_complement(ring: FiniteRing, x: int) -> Witness:
    """Least n >= 1 such that x^n is complemented, with that power's partner.

    Every element of a finite ring has a complemented power (some power is
    von Neumann regular, hence complemented), so a missing witness within the
    exponent budget is an engine bug rather than a mathematical outcome.
    """
    bound = pi_complement_bound(ring)
    p = x
    for n in range(1, bound + 1):
        w = find_complement(ring, p)
        if w is not None:
            return Witness(w.partner, WitnessKind.PI_COMPLEMENT, exponent=n)
        p = int(ring.mul[p, x])
    raise InternalConsistencyError(
        f"no complemented power of {ring.names[x]} in {ring.label} within exponent {bound}"
    )


def complemented_mask(ring: FiniteRing) -> int:
    """Bitmask of complemented elements (memoized; drives the ring-level verdicts)."""

    def build():
        out = 0
        prod_ok = flags.zero_only_u8(ring)
        sum_ok = flags.regular_u8(ring)
        for x in range(ring.order):
            if _search(ring, x, prod_ok, sum_ok) >= 0:
                out |= 1 << x
        return out

    return ring.memo("complemented_mask", build)


def almost_complemented_mask(ring: FiniteRing) -> int:
    def build():
        out = 0
        prod_ok = flags.nilpotent_u8(ring)
        sum_ok = flags.aregular_u8(ring)
        for x in range(ring.order):
            if _search(ring, x, prod_ok, sum_ok) >= 0:
                out |= 1 << x
        return out

    return ring.memo("almost_complemented_mask", build)


def roughly_complemented_mask(ring: FiniteRing) -> int:
    def build():
        out = 0
        prod_ok = flags.zero_only_u8(ring)
        sum_ok = flags.aregular_u8(ring)
        for x in range(ring.order):
            if _search(ring, x, prod_ok, sum_ok) >= 0:
                out |= 1 << x
        return out

    return ring.memo("roughly_complemented_mask", build)


def pi_complemented_mask(ring: FiniteRing) -> int:
    """Elements with b such that x*b nilpotent and x + b regular.

    This single-witness form is equivalent to "some power of x is
    complemented"; the equivalence itself is exercised by the lemma tests.
    """

    def build():
        out = 0
        prod_ok = flags.nilpotent_u8(ring)
        sum_ok = flags.regular_u8(ring)
        for x in range(ring.order):
            if _search(ring, x, prod_ok, sum_ok) >= 0:
                out |= 1 << x
        return out

    return ring.memo("pi_complemented_mask", build)


def is_complementary_pair(ring: FiniteRing, a: int, b: int) -> bool:
    """a*b = 0 and a + b regular."""
    return int(ring.mul[a, b]) == ring.zero and bool(
        (flags.regular_mask(ring) >> int(ring.add[a, b])) & 1
    )


def is_rough_pair(ring: FiniteRing, a: int, b: int) -> bool:
    """a*b = 0 and a + b aregular."""
    return int(ring.mul[a, b]) == ring.zero and bool(
        (flags.aregular_mask(ring) >> int(ring.add[a, b])) & 1
    )
