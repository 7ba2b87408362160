"""Finite commutative rings with identity, stored as materialized operation tables.

Elements are integers in [0, order); `add`, `mul` and `neg` are dense numpy
tables indexed by element id.  Every downstream predicate is an exhaustive
scan over these tables, so construction materializes them once and freezes
them.  Rings above the configurable order cap are refused.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from ringlab import kernels

ElementId = int

DEFAULT_MAX_ORDER = 4096
VALIDATE_AT_CONSTRUCTION_LIMIT = 256


class RingLabError(Exception):
    """Base class for all ringlab errors."""


class ConstructionError(RingLabError, ValueError):
    """Invalid input to a ring constructor."""


class CapExceededError(RingLabError):
    """A requested structure exceeds the configured order cap."""


class InternalConsistencyError(RingLabError):
    """The engine contradicted itself; indicates a bug, not a math result."""


def order_cap(override: int | None = None) -> int:
    """Current construction cap: explicit override, RINGLAB_MAX_ORDER, or default."""
    if override is not None:
        return override
    env = os.environ.get("RINGLAB_MAX_ORDER", "").strip()
    if env:
        return int(env)
    return DEFAULT_MAX_ORDER


def _check_cap(order: int, max_order: int | None) -> None:
    cap = order_cap(max_order)
    if order > cap:
        raise CapExceededError(f"ring of order {order} exceeds the cap {cap}")


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr, dtype=np.int32)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class Violation:
    """A failed ring axiom together with the first witness tuple."""

    axiom: str
    witness: tuple[int, ...]


class FiniteRing:
    """A finite commutative ring with identity, immutable after construction.

    Instances are safe to share across threads: all tables are read-only and
    every operation on them is a pure function.  Construct through the
    `construct_*` functions; the raw constructor performs no validation.
    """

    def __init__(self, order, zero, one, add, mul, neg, label, names=None):
        self.order = int(order)
        self.zero = int(zero)
        self.one = int(one)
        self.add = _freeze(add)
        self.mul = _freeze(mul)
        self.neg = _freeze(neg)
        self.label = label
        self.names = tuple(names) if names is not None else tuple(str(i) for i in range(order))
        # construction provenance, used by the classifier and rule engine
        self.factor_rings: tuple[FiniteRing, ...] | None = None
        self.quotient_of: FiniteRing | None = None
        self.quotient_ideal_mask: int | None = None
        self.coset_reps: tuple[int, ...] | None = None
        self.poly_base: FiniteRing | None = None
        self.poly_exponent: int | None = None
        self.trivext_base: FiniteRing | None = None
        self.trivext_module: ModuleSpec | None = None
        self.nil_part_mask: int | None = None   # the ideal I in a T = S + I split
        self.unit_part_mask: int | None = None  # the subring S in a T = S + I split
        self._memo: dict = {}

    def __repr__(self):
        return f"<FiniteRing {self.label} order={self.order}>"

    def element_name(self, x: ElementId) -> str:
        return self.names[x]

    def power(self, x: ElementId, k: int) -> ElementId:
        """x**k for k >= 0 (k = 0 gives the identity)."""
        acc = self.one
        row = self.mul
        for _ in range(k):
            acc = int(row[acc, x])
        return acc

    def memo(self, key, build):
        try:
            return self._memo[key]
        except KeyError:
            value = self._memo[key] = build()
            return value


class ModuleSpec:
    """A finite module over a FiniteRing: cyclic-factor carrier plus an action table.

    The carrier is the product of Z_{m_i} for the given moduli; `action` maps
    (ring element id, module element id) to a module element id and is kept
    as a materialized table so validation is a uniform scan.
    """

    def __init__(self, moduli, action, label=None):
        self.moduli = tuple(int(m) for m in moduli)
        if any(m < 1 for m in self.moduli):
            raise ConstructionError("module moduli must be >= 1")
        self.size = math.prod(self.moduli) if self.moduli else 1
        self.action = _freeze(action)
        if self.action.shape[1] != self.size:
            raise ConstructionError(
                f"action table has {self.action.shape[1]} columns, carrier has {self.size} elements"
            )
        self.label = label or (" x ".join(f"Z_{m}" for m in self.moduli) if self.moduli else "0")
        self.add, self.neg = _module_group_tables(self.moduli)
        self.names = tuple(self._format(i) for i in range(self.size))

    def _format(self, idx: int) -> str:
        t = self.element_tuple(idx)
        if len(t) == 1:
            return str(t[0])
        return "(" + ",".join(str(v) for v in t) + ")"

    def element_tuple(self, idx: int) -> tuple[int, ...]:
        if not self.moduli:
            return (0,)
        digits = []
        for m in reversed(self.moduli):
            digits.append(idx % m)
            idx //= m
        return tuple(reversed(digits))

    def index_of(self, t) -> int:
        idx = 0
        for m, v in zip(self.moduli, t):
            idx = idx * m + (v % m)
        return idx

    def __repr__(self):
        return f"<ModuleSpec {self.label} size={self.size}>"


def _module_group_tables(moduli):
    size = math.prod(moduli) if moduli else 1
    idx = np.arange(size)
    add = np.zeros((size, size), dtype=np.int64)
    neg = np.zeros(size, dtype=np.int64)
    # mixed-radix decomposition, most significant factor first
    digits = []
    rem = idx.copy()
    for m in reversed(moduli):
        digits.append(rem % m)
        rem //= m
    digits.reverse()
    for m, d in zip(moduli, digits):
        add = add * m + (d[:, None] + d[None, :]) % m
        neg = neg * m + (-d) % m
    return _freeze(add), _freeze(neg)


def module_over_zn(zn_ring: FiniteRing, moduli) -> ModuleSpec:
    """Canonical Z_n-module structure on the product of Z_{m_i}, each m_i | n.

    Relies on element ids of `zn_ring` being the residues 0..n-1, as produced
    by construct_zn.
    """
    n = zn_ring.order
    moduli = tuple(int(m) for m in moduli)
    for m in moduli:
        if m < 1 or n % m != 0:
            raise ConstructionError(
                f"modulus {m} does not divide the base order {n}; the scalar action would be ill-defined"
            )
    size = math.prod(moduli) if moduli else 1
    action = np.zeros((n, size), dtype=np.int64)
    spec_tuples = [tuple_for(i, moduli) for i in range(size)]
    for r in range(n):
        for i, t in enumerate(spec_tuples):
            scaled = tuple((r * v) % m for m, v in zip(moduli, t))
            action[r, i] = index_for(scaled, moduli)
    return ModuleSpec(moduli, action)


def tuple_for(idx: int, moduli) -> tuple[int, ...]:
    digits = []
    for m in reversed(moduli):
        digits.append(idx % m)
        idx //= m
    return tuple(reversed(digits))


def index_for(t, moduli) -> int:
    idx = 0
    for m, v in zip(moduli, t):
        idx = idx * m + (v % m)
    return idx


def validate_module_spec(ring: FiniteRing, spec: ModuleSpec) -> list[str]:
    """Names of violated module axioms (empty list when the action is lawful)."""
    act = spec.action
    madd = spec.add
    n, s = ring.order, spec.size
    if act.shape != (n, s):
        return [f"action table shape {act.shape} does not match ring {n} x module {s}"]
    if ((act < 0) | (act >= s)).any():
        return ["action values out of range"]
    out = []
    if (act[ring.one] != np.arange(s)).any():
        out.append("identity action: 1*m != m for some m")
    # additivity in the module argument: r*(m+u) == r*m + r*u
    for r in range(n):
        if (act[r][madd] != madd[np.ix_(act[r], act[r])]).any():
            out.append(f"additivity in module argument fails for ring element {ring.names[r]}")
            break
    # additivity in the ring argument: (r+s)*m == r*m + s*m
    radd = ring.add
    for r in range(n):
        lhs = act[radd[r]]                    # [s, m] -> (r+s)*m
        rhs = madd[np.broadcast_to(act[r], (n, s)), act]
        if (lhs != rhs).any():
            out.append(f"additivity in ring argument fails for ring element {ring.names[r]}")
            break
    # mixed associativity: (rs)*m == r*(s*m)
    rmul = ring.mul
    for r in range(n):
        lhs = act[rmul[r]]                    # [s, m] -> (rs)*m
        rhs = act[r][act]                     # [s, m] -> r*(s*m)
        if (lhs != rhs).any():
            out.append(f"scalar associativity fails for ring element {ring.names[r]}")
            break
    return out


def validate_ring_axioms(ring: FiniteRing) -> list[Violation]:
    """Exhaustive axiom scan; empty list iff the tables form a commutative ring with 1."""
    raw = kernels.axiom_violations(ring.add, ring.mul, ring.neg, ring.zero, ring.one)
    return [Violation(axiom, tuple(int(v) for v in witness)) for axiom, witness in raw]


def _assert_well_formed(ring: FiniteRing) -> FiniteRing:
    if ring.order <= VALIDATE_AT_CONSTRUCTION_LIMIT:
        violations = validate_ring_axioms(ring)
        if violations:
            raise InternalConsistencyError(
                f"constructor produced an invalid ring {ring.label}: {violations[0]}"
            )
    return ring


def construct_zn(n: int, max_order: int | None = None) -> FiniteRing:
    """The ring Z/nZ with elements 0..n-1 in canonical order."""
    if n < 2:
        raise ConstructionError("n must be >= 2: the identity must differ from 0")
    _check_cap(n, max_order)
    idx = np.arange(n)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    neg = (-idx) % n
    ring = FiniteRing(n, 0, 1 % n, add, mul, neg, f"Z_{n}")
    return _assert_well_formed(ring)


def construct_product(factors, max_order: int | None = None) -> FiniteRing:
    """Componentwise product ring; element order is lexicographic in the factors."""
    factors = tuple(factors)
    if not factors:
        raise ConstructionError("a product needs at least one factor")
    order = math.prod(f.order for f in factors)
    _check_cap(order, max_order)
    idx = np.arange(order)
    digits = []
    rem = idx.copy()
    for f in reversed(factors):
        digits.append(rem % f.order)
        rem //= f.order
    digits.reverse()

    add = np.zeros((order, order), dtype=np.int64)
    mul = np.zeros((order, order), dtype=np.int64)
    neg = np.zeros(order, dtype=np.int64)
    zero = one = 0
    for f, d in zip(factors, digits):
        add = add * f.order + f.add[d[:, None], d[None, :]]
        mul = mul * f.order + f.mul[d[:, None], d[None, :]]
        neg = neg * f.order + f.neg[d]
        zero = zero * f.order + f.zero
        one = one * f.order + f.one

    if len(factors) == 1:
        names = factors[0].names
        label = factors[0].label
    else:
        names = []
        for i in range(order):
            parts = [f.names[int(d[i])] for f, d in zip(factors, digits)]
            names.append("(" + ",".join(parts) + ")")
        label = " x ".join(f.label for f in factors)
    ring = FiniteRing(order, zero, one, add, mul, neg, label, names)
    ring.factor_rings = factors
    return _assert_well_formed(ring)


def _as_member_mask(ring: FiniteRing, ideal) -> int:
    if isinstance(ideal, int):
        return ideal
    members = getattr(ideal, "members", None)
    if isinstance(members, int):
        return members
    mask = 0
    for x in ideal:
        mask |= 1 << int(x)
    return mask


def _check_is_ideal(ring: FiniteRing, mask: int) -> None:
    if not (mask >> ring.zero) & 1:
        raise ConstructionError("not an ideal: does not contain 0")
    members = [i for i in range(ring.order) if (mask >> i) & 1]
    add = ring.add
    mul = ring.mul
    for x in members:
        row = add[x]
        for y in members:
            if not (mask >> int(row[y])) & 1:
                raise ConstructionError(
                    f"not an ideal: not closed under addition at ({ring.names[x]}, {ring.names[y]})"
                )
    for r in range(ring.order):
        row = mul[r]
        for x in members:
            if not (mask >> int(row[x])) & 1:
                raise ConstructionError(
                    f"not an ideal: not absorbing at ({ring.names[r]}, {ring.names[x]})"
                )


def construct_quotient(ring: FiniteRing, ideal, max_order: int | None = None) -> FiniteRing:
    """Quotient by a proper ideal; cosets are ordered by least representative.

    `ideal` may be a bitmask, an iterable of element ids, or any object with
    an integer `members` bitmask (e.g. a spectrum Ideal).
    """
    mask = _as_member_mask(ring, ideal)
    _check_is_ideal(ring, mask)
    if mask == (1 << ring.order) - 1:
        raise ConstructionError("the ideal is the whole ring; the quotient identity would be 0")
    members = [i for i in range(ring.order) if (mask >> i) & 1]
    add = ring.add
    rep_of = [-1] * ring.order
    for x in range(ring.order):
        if rep_of[x] >= 0:
            continue
        coset = sorted(int(add[x, i]) for i in members)
        r = coset[0]
        for y in coset:
            rep_of[y] = r
    reps = sorted(set(rep_of))
    coset_index = {r: c for c, r in enumerate(reps)}
    order = len(reps)
    _check_cap(order, max_order)
    to_coset = np.array([coset_index[rep_of[x]] for x in range(ring.order)], dtype=np.int64)
    reps_arr = np.array(reps, dtype=np.int64)
    qadd = to_coset[ring.add[np.ix_(reps_arr, reps_arr)]]
    qmul = to_coset[ring.mul[np.ix_(reps_arr, reps_arr)]]
    qneg = to_coset[ring.neg[reps_arr]]
    member_names = "{" + ",".join(ring.names[i] for i in members) + "}" if len(members) <= 6 else f"I[{len(members)}]"
    names = tuple(f"[{ring.names[r]}]" for r in reps)
    quotient = FiniteRing(
        order,
        int(to_coset[ring.zero]),
        int(to_coset[ring.one]),
        qadd,
        qmul,
        qneg,
        f"{ring.label}/{member_names}",
        names,
    )
    quotient.quotient_of = ring
    quotient.quotient_ideal_mask = mask
    quotient.coset_reps = tuple(reps)
    return _assert_well_formed(quotient)


def _poly_name(coeffs, base_names) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        cname = base_names[c]
        if i == 0:
            terms.append(cname)
        else:
            xpow = "x" if i == 1 else f"x^{i}"
            terms.append(xpow if cname == "1" else f"{cname}{xpow}")
    return "+".join(terms) if terms else "0"


def construct_poly_trunc(ring: FiniteRing, k: int, max_order: int | None = None) -> FiniteRing:
    """R[x] truncated at x^k = 0: polynomials of degree < k over R.

    Coefficient tuples are little-endian, so the copy of R sits at indices
    0..order(R)-1 and x has index order(R).  The constants and the ideal (x)
    are recorded as the unit/nil parts of the T = S + I split.
    """
    if k < 2:
        raise ConstructionError("k must be >= 2; k = 1 is the base ring itself")
    n = ring.order
    order = n**k
    _check_cap(order, max_order)
    idx = np.arange(order)
    digits = []  # digits[i][e] = coefficient of x^i in element e
    rem = idx.copy()
    for _ in range(k):
        digits.append(rem % n)
        rem //= n
    weights = [n**i for i in range(k)]

    add = np.zeros((order, order), dtype=np.int64)
    for i in range(k):
        add += ring.add[digits[i][:, None], digits[i][None, :]].astype(np.int64) * weights[i]
    neg = np.zeros(order, dtype=np.int64)
    for i in range(k):
        neg += ring.neg[digits[i]].astype(np.int64) * weights[i]

    mul = np.zeros((order, order), dtype=np.int64)
    for t in range(k):
        acc = np.full((order, order), ring.zero, dtype=np.int64)
        for i in range(t + 1):
            j = t - i
            term = ring.mul[digits[i][:, None], digits[j][None, :]]
            acc = ring.add[acc, term]
        mul += acc * weights[t]

    names = tuple(
        _poly_name([int(d[e]) for d in digits], ring.names) for e in range(order)
    )
    poly = FiniteRing(
        order,
        ring.zero,
        ring.one,
        add,
        mul,
        neg,
        f"{ring.label}[x]/(x^{k})",
        names,
    )
    poly.poly_base = ring
    poly.poly_exponent = k
    subring_mask = 0
    for e in range(n):
        subring_mask |= 1 << e
    nil_mask = 0
    for e in range(order):
        if e % n == ring.zero:  # zero constant term
            nil_mask |= 1 << e
    poly.unit_part_mask = subring_mask
    poly.nil_part_mask = nil_mask
    return _assert_well_formed(poly)


def construct_trivial_extension(
    ring: FiniteRing, module: ModuleSpec, max_order: int | None = None
) -> FiniteRing:
    """The idealization R ∝ M: pairs (r, m) with (r,m)(s,u) = (rs, ru + sm).

    0 ∝ M is a square-zero nil ideal; the split into the copy of R and that
    ideal is recorded for the classifier.
    """
    problems = validate_module_spec(ring, module)
    if problems:
        raise ConstructionError(f"module action rejected: {problems[0]}")
    n, s = ring.order, module.size
    order = n * s
    _check_cap(order, max_order)
    idx = np.arange(order)
    r_part = idx // s
    m_part = idx % s

    radd = ring.add[r_part[:, None], r_part[None, :]].astype(np.int64)
    madd = module.add[m_part[:, None], m_part[None, :]].astype(np.int64)
    add = radd * s + madd

    rmul = ring.mul[r_part[:, None], r_part[None, :]].astype(np.int64)
    left = module.action[r_part[:, None], m_part[None, :]]   # r1 * m2
    right = module.action[r_part[None, :], m_part[:, None]]  # r2 * m1
    mmul = module.add[left, right].astype(np.int64)
    mul = rmul * s + mmul

    neg = ring.neg[r_part].astype(np.int64) * s + module.neg[m_part]
    names = tuple(f"({ring.names[int(r_part[e])]},{module.names[int(m_part[e])]})" for e in range(order))
    ext = FiniteRing(
        order,
        ring.zero * s + 0,
        ring.one * s + 0,
        add,
        mul,
        neg,
        f"{ring.label}∝{module.label}",
        names,
    )
    ext.trivext_base = ring
    ext.trivext_module = module
    subring_mask = 0
    for r in range(n):
        subring_mask |= 1 << (r * s)
    nil_mask = 0
    for m in range(s):
        nil_mask |= 1 << (ring.zero * s + m)
    ext.unit_part_mask = subring_mask
    ext.nil_part_mask = nil_mask
    return _assert_well_formed(ext)
