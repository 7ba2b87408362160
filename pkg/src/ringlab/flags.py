"""Per-element masks shared by the spectrum, element and classification layers.

Every function memoizes on the ring, so each mask is computed once per ring.
Masks are Python-int bitsets over element ids; parallel uint8 arrays are kept
for the witness-search kernel.
"""

from __future__ import annotations

import numpy as np

from ringlab import kernels
from ringlab.core import FiniteRing


def bits(mask: int):
    """Ascending element ids set in a bitmask."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def mask_of(ids) -> int:
    out = 0
    for i in ids:
        out |= 1 << int(i)
    return out


def ann_masks(ring: FiniteRing) -> list[int]:
    """ann_masks(R)[x] = bitmask of y with x*y = 0."""
    return ring.memo("ann_masks", lambda: kernels.annihilator_masks(ring.mul, ring.zero))


def regular_mask(ring: FiniteRing) -> int:
    """Non-zero-divisors: x with x*y = 0 only for y = 0."""

    def build():
        zero_only = 1 << ring.zero
        out = 0
        for x, m in enumerate(ann_masks(ring)):
            if m == zero_only:
                out |= 1 << x
        return out

    return ring.memo("regular_mask", build)


def unit_mask(ring: FiniteRing) -> int:
    """Invertible elements, found by scanning each multiplication row for 1."""

    def build():
        out = 0
        for x in range(ring.order):
            if np.flatnonzero(ring.mul[x] == ring.one).size:
                out |= 1 << x
        return out

    return ring.memo("unit_mask", build)


def nilpotency_indices(ring: FiniteRing) -> tuple[int | None, ...]:
    """Least k >= 1 with x^k = 0, or None; powers are iterated with cycle detection."""

    def build():
        mul = ring.mul
        zero = ring.zero
        out = []
        for x in range(ring.order):
            seen = set()
            p = x
            k = 1
            index = None
            while p not in seen:
                if p == zero:
                    index = k
                    break
                seen.add(p)
                p = int(mul[p, x])
                k += 1
            out.append(index)
        return tuple(out)

    return ring.memo("nilpotency_indices", build)


def nilpotent_mask(ring: FiniteRing) -> int:
    def build():
        out = 0
        for x, k in enumerate(nilpotency_indices(ring)):
            if k is not None:
                out |= 1 << x
        return out

    return ring.memo("nilpotent_mask", build)


def aregular_mask(ring: FiniteRing) -> int:
    """x with "x*a nilpotent implies a nilpotent": regular modulo the nilradical."""

    def build():
        nil = nilpotent_mask(ring)
        out = 0
        for x in range(ring.order):
            row = ring.mul[x].tolist()
            ok = True
            for a in range(ring.order):
                if (nil >> row[a]) & 1 and not (nil >> a) & 1:
                    ok = False
                    break
            if ok:
                out |= 1 << x
        return out

    return ring.memo("aregular_mask", build)


def idempotent_mask(ring: FiniteRing) -> int:
    def build():
        out = 0
        for x in range(ring.order):
            if int(ring.mul[x, x]) == x:
                out |= 1 << x
        return out

    return ring.memo("idempotent_mask", build)


def vn_witnesses(ring: FiniteRing) -> tuple[int | None, ...]:
    """Per element, the first a with x^2 * a = x (von Neumann regularity), or None."""

    def build():
        mul = ring.mul
        out = []
        for x in range(ring.order):
            xsq = int(mul[x, x])
            hits = np.flatnonzero(mul[xsq] == x)
            out.append(int(hits[0]) if hits.size else None)
        return tuple(out)

    return ring.memo("vn_witnesses", build)


def pi_regular_exponents(ring: FiniteRing) -> tuple[int | None, ...]:
    """Per element, the least n >= 1 with x^n von Neumann regular, or None.

    The power orbit of x has at most order(R) distinct values, so the scan
    terminates; finite rings always yield a witness.
    """

    def build():
        mul = ring.mul
        vn = vn_witnesses(ring)
        out = []
        for x in range(ring.order):
            seen = set()
            p = x
            n = 1
            found = None
            while p not in seen:
                if vn[p] is not None:
                    found = n
                    break
                seen.add(p)
                p = int(mul[p, x])
                n += 1
            out.append(found)
        return tuple(out)

    return ring.memo("pi_regular_exponents", build)


def _u8(ring: FiniteRing, key: str, mask: int) -> np.ndarray:
    def build():
        arr = np.zeros(ring.order, dtype=np.uint8)
        for i in bits(mask):
            arr[i] = 1
        arr.setflags(write=False)
        return arr

    return ring.memo(("u8", key), build)


def regular_u8(ring: FiniteRing) -> np.ndarray:
    return _u8(ring, "regular", regular_mask(ring))


def aregular_u8(ring: FiniteRing) -> np.ndarray:
    return _u8(ring, "aregular", aregular_mask(ring))


def nilpotent_u8(ring: FiniteRing) -> np.ndarray:
    return _u8(ring, "nilpotent", nilpotent_mask(ring))


def zero_only_u8(ring: FiniteRing) -> np.ndarray:
    return _u8(ring, "zero_only", 1 << ring.zero)
