"""Ring-level predicate verdicts, hierarchy checks and theorem verification.

Every verdict on a finite ring is decided exhaustively (never Unknown) and
carries provenance; False verdicts on universally quantified predicates carry
the least-index counterexample.  The quotient-criteria equivalence is only
evaluated on reduced rings: Z_4 satisfies the annihilator-side conditions
while failing complementedness, so the unrestricted equivalence is unsound
and the restriction is recorded on the report.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from ringlab import elements, flags, spectrum
from ringlab.core import FiniteRing, InternalConsistencyError, construct_quotient
from ringlab.spectrum import DEFAULT_ENUM_CAP

PREDICATES = (
    "reduced",
    "nearly_reduced",
    "roughly_reduced",
    "vnr",
    "zero_dimensional",
    "complemented",
    "semi_complemented",
    "pi_complemented",
    "almost_complemented",
    "roughly_complemented",
    "property_A",
    "annihilator_condition",
    "property_D",
    "property_D_flat",
    "unique_prime",
    "local",
    "min_compact",
)

# implications that must hold for every ring (the classification hierarchy),
# plus the fact that complemented rings are reduced
HIERARCHY_ARROWS = (
    ("vnr", "complemented"),
    ("vnr", "zero_dimensional"),
    ("complemented", "semi_complemented"),
    ("semi_complemented", "pi_complemented"),
    ("pi_complemented", "almost_complemented"),
    ("unique_prime", "zero_dimensional"),
    ("unique_prime", "property_D"),
    ("property_D", "semi_complemented"),
    ("property_D", "property_D_flat"),
    ("property_D_flat", "almost_complemented"),
    ("complemented", "reduced"),
)


@dataclass(frozen=True)
class Verdict:
    """Three-valued predicate outcome with provenance.

    value None means Unknown (only the structural rule engine emits it; the
    exhaustive finite engine always decides).
    """

    value: bool | None
    provenance: str
    counterexample: int | None = None

    def as_json_dict(self, ring: FiniteRing | None = None) -> dict:
        out: dict = {"value": self.value if self.value is not None else "unknown"}
        out["provenance"] = self.provenance
        if self.counterexample is not None:
            ce: dict = {"element": self.counterexample}
            if ring is not None:
                ce["name"] = ring.names[self.counterexample]
        else:
            ce = None
        out["counterexample"] = ce
        return out


@dataclass
class PropertyReport:
    """Predicate-name -> Verdict map for one ring, in stable predicate order."""

    ring_label: str
    verdicts: dict[str, Verdict]
    notes: tuple[str, ...] = ()

    def value(self, predicate: str) -> bool | None:
        return self.verdicts[predicate].value

    def as_json_dict(self, ring: FiniteRing | None = None) -> dict:
        return {
            "ring": self.ring_label,
            "verdicts": {
                name: self.verdicts[name].as_json_dict(ring) for name in PREDICATES
            },
            "notes": list(self.notes),
        }

    def to_json(self, ring: FiniteRing | None = None) -> str:
        return json.dumps(self.as_json_dict(ring), indent=2)


@dataclass(frozen=True)
class TheoremCheck:
    name: str
    passed: bool
    detail: str
    skipped: bool = False


@dataclass(frozen=True)
class TheoremReport:
    ring_label: str
    checks: tuple[TheoremCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple[TheoremCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)


def _first_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _universal(mask: int, domain: int, n: int, what: str) -> Verdict:
    """True iff every element of `domain` is in `mask`; else least counterexample."""
    missing = domain & ~mask
    if missing == 0:
        count = domain.bit_count()
        return Verdict(True, f"{what} verified for all {count} applicable elements")
    ce = _first_bit(missing)
    return Verdict(False, f"element {ce} fails: {what}", counterexample=ce)


def classify_ring(ring: FiniteRing, cap: int = DEFAULT_ENUM_CAP) -> PropertyReport:
    """Decide every supported predicate on a finite ring by exhaustive search."""

    def build() -> PropertyReport:
        n = ring.order
        full = (1 << n) - 1
        zero_only = 1 << ring.zero
        nil = flags.nilpotent_mask(ring)
        reg = flags.regular_mask(ring)
        areg = flags.aregular_mask(ring)
        units = flags.unit_mask(ring)
        eta = spectrum.eta_ideal(ring).members
        nonnil = full & ~nil

        v: dict[str, Verdict] = {}

        if nil == zero_only:
            v["reduced"] = Verdict(True, "no nonzero nilpotent element")
        else:
            ce = _first_bit(nil & ~zero_only)
            k = flags.nilpotency_indices(ring)[ce]
            v["reduced"] = Verdict(
                False, f"element {ce} is nilpotent of index {k}", counterexample=ce
            )

        if eta == zero_only:
            v["nearly_reduced"] = Verdict(
                True, "no nonzero element is annihilated by an aregular element"
            )
        else:
            ce = _first_bit(eta & ~zero_only)
            v["nearly_reduced"] = Verdict(
                False,
                f"element {ce} is a nonzero member of the aregular-annihilator ideal",
                counterexample=ce,
            )

        if eta == nil:
            v["roughly_reduced"] = Verdict(
                True, "every nilpotent element is annihilated by an aregular element"
            )
        else:
            ce = _first_bit(eta ^ nil)
            v["roughly_reduced"] = Verdict(
                False,
                f"nilpotent element {ce} is annihilated by no aregular element",
                counterexample=ce,
            )

        vn = flags.vn_witnesses(ring)
        vn_mask = 0
        for x, w in enumerate(vn):
            if w is not None:
                vn_mask |= 1 << x
        v["vnr"] = _universal(vn_mask, full, n, "quasi-inverse witness (x^2*a = x)")

        pi_reg = flags.pi_regular_exponents(ring)
        pr_mask = 0
        for x, e in enumerate(pi_reg):
            if e is not None:
                pr_mask |= 1 << x
        v["zero_dimensional"] = _universal(
            pr_mask, full, n, "some power is von Neumann regular"
        )

        v["complemented"] = _universal(
            elements.complemented_mask(ring), full, n, "complement partner"
        )
        v["semi_complemented"] = _universal(
            elements.complemented_mask(ring), nonnil, n, "complement partner (non-nilpotent elements)"
        )
        v["pi_complemented"] = _universal(
            elements.pi_complemented_mask(ring),
            full,
            n,
            "partner with nilpotent product and regular sum",
        )
        v["almost_complemented"] = _universal(
            elements.almost_complemented_mask(ring),
            full,
            n,
            "partner with nilpotent product and aregular sum",
        )
        v["roughly_complemented"] = _universal(
            elements.roughly_complemented_mask(ring),
            full,
            n,
            "partner with zero product and aregular sum",
        )

        failure = spectrum.property_a_failure(ring, cap)
        if failure is None:
            count = len(spectrum.enumerate_ideals(ring, cap))
            v["property_A"] = Verdict(
                True,
                f"each of the {count} ideals with zero annihilator contains a regular element"
                " (all ideals of a finite ring are finitely generated)",
            )
        else:
            v["property_A"] = Verdict(
                False,
                f"dense ideal {{{','.join(ring.names[i] for i in failure.elements())}}}"
                " contains no regular element",
            )

        pair = spectrum.annihilator_condition_failure(ring)
        if pair is None:
            v["annihilator_condition"] = Verdict(
                True, "every two-element annihilator equals a single-element annihilator"
            )
        else:
            a, b = pair
            v["annihilator_condition"] = Verdict(
                False,
                f"Ann({ring.names[a]},{ring.names[b]}) matches no single-element annihilator",
                counterexample=a,
            )

        diff = nonnil & ~reg
        if diff == 0:
            v["property_D"] = Verdict(True, "every non-nilpotent element is regular")
        else:
            ce = _first_bit(diff)
            v["property_D"] = Verdict(
                False, f"element {ce} is a non-nilpotent zero divisor", counterexample=ce
            )

        diff = nonnil & ~areg
        if diff == 0:
            v["property_D_flat"] = Verdict(
                True, "every non-nilpotent element is aregular (the reduced quotient is a domain)"
            )
        else:
            ce = _first_bit(diff)
            v["property_D_flat"] = Verdict(
                False, f"element {ce} is non-nilpotent but not aregular", counterexample=ce
            )

        neither = full & ~(units | nil)
        if neither == 0:
            v["unique_prime"] = Verdict(True, "every element is a unit or nilpotent")
        else:
            ce = _first_bit(neither)
            v["unique_prime"] = Verdict(
                False, f"element {ce} is neither a unit nor nilpotent", counterexample=ce
            )

        maxima = spectrum.maximal_ideals(ring, cap)
        if len(maxima) == 1:
            v["local"] = Verdict(True, "unique maximal ideal")
        else:
            v["local"] = Verdict(False, f"{len(maxima)} maximal ideals")

        v["min_compact"] = Verdict(
            True,
            "constant for finite rings: the spectrum is finite, so the minimal-prime"
            " subspace is compact",
        )

        notes = []
        if v["property_A"].value and not v["complemented"].value:
            notes.append(
                "annihilator-side conditions hold while the ring is not complemented;"
                " the quotient-criteria equivalence applies to reduced rings only"
            )
        return PropertyReport(ring.label, v, tuple(notes))

    return ring.memo(("classify", cap), build)


def verify_hierarchy(ring: FiniteRing, cap: int = DEFAULT_ENUM_CAP) -> list[tuple[str, str]]:
    """Violated implication arrows of the classification hierarchy (expected none)."""
    report = classify_ring(ring, cap)
    out = []
    for src, dst in HIERARCHY_ARROWS:
        if report.value(src) is True and report.value(dst) is False:
            out.append((src, dst))
    return out


def classical_quotient(ring: FiniteRing) -> FiniteRing:
    """q(R) for a finite ring: R itself, after verifying reg(R) = U(R).

    Injective multiplication maps on a finite set are surjective, so every
    regular element is already invertible and localizing changes nothing.
    A regular non-unit would mean corrupted tables.
    """
    bad = flags.regular_mask(ring) ^ flags.unit_mask(ring)
    if bad:
        raise InternalConsistencyError(
            f"regular non-unit {_first_bit(bad)} found in {ring.label};"
            " finite rings cannot have one"
        )
    return ring


def aregular_quotient(ring: FiniteRing) -> FiniteRing:
    """The total quotient at the aregular set: kill its kernel ideal, then localize."""
    return classical_quotient(construct_quotient(ring, spectrum.eta_ideal(ring)))


def verify_theorems(ring: FiniteRing, cap: int = DEFAULT_ENUM_CAP) -> TheoremReport:
    """Instantiate the structure theorems as checks over computed verdicts."""
    report = classify_ring(ring, cap)
    rv = report.value
    checks = []

    lhs = rv("semi_complemented")
    rhs = rv("property_D") or rv("complemented")
    checks.append(
        TheoremCheck(
            "semi_complemented_dichotomy",
            lhs == rhs,
            f"semi={lhs}, zero-divisors-nilpotent={rv('property_D')}, complemented={rv('complemented')}",
        )
    )

    q = classical_quotient(ring)
    c1 = classify_ring(q, cap).value("zero_dimensional")
    c2 = rv("pi_complemented")
    c34 = all(
        elements.find_pi_complement(ring, x) is not None for x in range(ring.order)
    )
    c5 = rv("almost_complemented") and rv("nearly_reduced")
    checks.append(
        TheoremCheck(
            "pi_complemented_equivalences",
            c1 == c2 == c34 == c5,
            f"q-zero-dimensional={c1}, single-witness={c2}, power-complemented={c34},"
            f" almost-and-nearly-reduced={c5}",
        )
    )

    if rv("reduced"):
        values = {
            "complemented": rv("complemented"),
            "q_vnr": classify_ring(q, cap).value("vnr"),
            "property_A": rv("property_A") and rv("min_compact"),
            "annihilator_condition": rv("annihilator_condition") and rv("min_compact"),
        }
        passed = len(set(values.values())) == 1
        checks.append(
            TheoremCheck(
                "complemented_criteria_reduced",
                passed,
                ", ".join(f"{k}={v}" for k, v in values.items()),
            )
        )
    else:
        checks.append(
            TheoremCheck(
                "complemented_criteria_reduced",
                True,
                "skipped: ring not reduced (the equivalence requires reducedness;"
                " see the report notes)",
                skipped=True,
            )
        )

    reduced_quotient = construct_quotient(ring, spectrum.nilradical(ring))
    c_zero_dim = rv("zero_dimensional")
    c_all_pi_regular = all(e is not None for e in flags.pi_regular_exponents(ring))
    c_quot_vnr = classify_ring(reduced_quotient, cap).value("vnr")
    checks.append(
        TheoremCheck(
            "zero_dimensionality_criteria",
            c_zero_dim == c_all_pi_regular == c_quot_vnr,
            f"zero-dimensional={c_zero_dim}, all-pi-regular={c_all_pi_regular},"
            f" reduced-quotient-vnr={c_quot_vnr}",
        )
    )

    lhs = rv("roughly_complemented")
    rhs = rv("almost_complemented") and rv("roughly_reduced")
    checks.append(
        TheoremCheck(
            "rough_complementedness_criterion",
            lhs == rhs,
            f"roughly={lhs}, almost={rv('almost_complemented')},"
            f" roughly_reduced={rv('roughly_reduced')}",
        )
    )

    return TheoremReport(ring.label, tuple(checks))
