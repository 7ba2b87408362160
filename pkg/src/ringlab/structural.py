"""Classification of ring expressions, including infinite constructions.

Finite leaves are decided by the exhaustive engine; composite nodes are
decided by structure rules (nil-ideal transfer, product laws, polynomial-ring
laws) applied over recursively classified children, followed by a fixpoint of
generic closure rules.  A predicate no rule decides stays Unknown: the rule
layer never searches an infinite ring.  `cross_validate` replays every
rule-derived verdict against brute force on a finite realization and treats
any disagreement as a hard failure.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache

from ringlab import classify as _classify
from ringlab import elements, flags, kernels, spectrum
from ringlab.classify import PREDICATES, HIERARCHY_ARROWS, Verdict
from ringlab.core import (
    CapExceededError,
    ConstructionError,
    FiniteRing,
    RingLabError,
    construct_poly_trunc,
    construct_product,
    construct_quotient,
    construct_trivial_extension,
    construct_zn,
    module_over_zn,
    order_cap,
)
from ringlab.elements import ElementProfile
from ringlab.spectrum import DEFAULT_ENUM_CAP, Ideal


class SchemaError(RingLabError, ValueError):
    """A ring-expression document violates the published schema."""


class CrossValidationError(RingLabError):
    """The rule engine and the exhaustive engine disagreed (engine bug)."""


# ---------------------------------------------------------------------------
# expression AST


@dataclass(frozen=True)
class Zn:
    n: int


@dataclass(frozen=True)
class IntegerRing:
    pass


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Quotient:
    base: object
    ideal_gens: tuple[int, ...]


@dataclass(frozen=True)
class PolyTrunc:
    base: object
    k: int


@dataclass(frozen=True)
class Poly:
    base: object


@dataclass(frozen=True)
class ModuleExpr:
    """Module carrier: product of ("cyclic", m) and ("integers",) factors."""

    factors: tuple

    @property
    def is_finite(self) -> bool:
        return all(f[0] == "cyclic" for f in self.factors)

    @property
    def is_trivial(self) -> bool:
        return all(f == ("cyclic", 1) for f in self.factors)

    def cyclic_moduli(self) -> tuple[int, ...]:
        return tuple(f[1] for f in self.factors if f[0] == "cyclic")

    @property
    def label(self) -> str:
        if not self.factors or self.is_trivial:
            return "0"
        parts = ["Z" if f[0] == "integers" else f"Z_{f[1]}" for f in self.factors]
        return " x ".join(parts)


RingExpr = Zn | IntegerRing | Product | Quotient | PolyTrunc | Poly  # plus TrivExt below


@dataclass(frozen=True)
class TrivExt:
    base: object
    module: ModuleExpr


# ---------------------------------------------------------------------------
# parsing (bit-exact JSON schema)

_NODE_KEYS = ("zn", "z", "product", "quotient", "polytrunc", "poly", "trivext")


def parse_ring_expr(doc):
    """Parse a JSON document (text or already-decoded object) into a RingExpr.

    Schema violations raise SchemaError naming the offending path.
    """
    if isinstance(doc, (str, bytes)):
        try:
            data = json.loads(doc)
        except json.JSONDecodeError as e:
            raise SchemaError(f"$: not valid JSON ({e})") from e
    else:
        data = doc
    return _parse(data, "$")


def _parse(data, path) -> RingExpr:
    if not isinstance(data, dict):
        raise SchemaError(f"{path}: expected an object, got {type(data).__name__}")
    keys = [k for k in data if k in _NODE_KEYS]
    if len(keys) != 1 or len(data) != 1:
        raise SchemaError(
            f"{path}: expected exactly one node key from {_NODE_KEYS}, got {sorted(data)}"
        )
    kind = keys[0]
    body = data[kind]
    if kind == "zn":
        if not isinstance(body, int) or isinstance(body, bool) or body < 2:
            raise SchemaError(f"{path}.zn: expected an integer >= 2")
        return Zn(body)
    if kind == "z":
        if body is not True:
            raise SchemaError(f"{path}.z: expected true")
        return IntegerRing()
    if kind == "product":
        if not isinstance(body, list) or not body:
            raise SchemaError(f"{path}.product: expected a non-empty list")
        return Product(tuple(_parse(x, f"{path}.product[{i}]") for i, x in enumerate(body)))
    if kind == "quotient":
        if not isinstance(body, dict) or set(body) != {"base", "ideal_gens"}:
            raise SchemaError(f"{path}.quotient: expected {{base, ideal_gens}}")
        gens = body["ideal_gens"]
        if not isinstance(gens, list) or any(
            not isinstance(g, int) or isinstance(g, bool) or g < 0 for g in gens
        ):
            raise SchemaError(f"{path}.quotient.ideal_gens: expected a list of element indices >= 0")
        return Quotient(_parse(body["base"], f"{path}.quotient.base"), tuple(gens))
    if kind == "polytrunc":
        if not isinstance(body, dict) or set(body) != {"base", "k"}:
            raise SchemaError(f"{path}.polytrunc: expected {{base, k}}")
        k = body["k"]
        if not isinstance(k, int) or isinstance(k, bool) or k < 2:
            raise SchemaError(f"{path}.polytrunc.k: expected an integer >= 2")
        return PolyTrunc(_parse(body["base"], f"{path}.polytrunc.base"), k)
    if kind == "poly":
        if not isinstance(body, dict) or set(body) != {"base"}:
            raise SchemaError(f"{path}.poly: expected {{base}}")
        return Poly(_parse(body["base"], f"{path}.poly.base"))
    # trivext
    if not isinstance(body, dict) or set(body) != {"base", "module"}:
        raise SchemaError(f"{path}.trivext: expected {{base, module}}")
    base = _parse(body["base"], f"{path}.trivext.base")
    mod = body["module"]
    if not isinstance(mod, dict) or set(mod) != {"factors"}:
        raise SchemaError(f"{path}.trivext.module: expected {{factors}}")
    raw = mod["factors"]
    if not isinstance(raw, list):
        raise SchemaError(f"{path}.trivext.module.factors: expected a list")
    factors = []
    for i, f in enumerate(raw):
        fpath = f"{path}.trivext.module.factors[{i}]"
        if not isinstance(f, dict) or len(f) != 1:
            raise SchemaError(f"{fpath}: expected {{cyclic: m}} or {{integers: true}}")
        if "cyclic" in f:
            m = f["cyclic"]
            if not isinstance(m, int) or isinstance(m, bool) or m < 1:
                raise SchemaError(f"{fpath}.cyclic: expected an integer >= 1")
            factors.append(("cyclic", m))
        elif "integers" in f:
            if f["integers"] is not True:
                raise SchemaError(f"{fpath}.integers: expected true")
            factors.append(("integers",))
        else:
            raise SchemaError(f"{fpath}: unknown module factor {sorted(f)}")
    module = ModuleExpr(tuple(factors))
    _check_trivext_action(base, module, f"{path}.trivext")
    return TrivExt(base, module)


def _check_trivext_action(base, module: ModuleExpr, path: str) -> None:
    """The canonical scalar action must be well-defined over the base.

    Only bases with integer-residue semantics carry a canonical action on
    cyclic factors, so idealizations are restricted to Z and Z_n bases.
    """
    if isinstance(base, IntegerRing):
        return
    if isinstance(base, Zn):
        for f in module.factors:
            if f[0] == "integers":
                raise SchemaError(
                    f"{path}: an integers module factor needs the integers as base"
                    " (scalar action over a finite base would be ill-defined)"
                )
            if base.n % f[1] != 0:
                raise SchemaError(
                    f"{path}: cyclic modulus {f[1]} does not divide the base order {base.n};"
                    " the scalar action would be ill-defined"
                )
        return
    raise SchemaError(
        f"{path}: idealization base must be {{z}} or {{zn}} so the scalar action is canonical"
    )


def expr_label(expr) -> str:
    if isinstance(expr, Zn):
        return f"Z_{expr.n}"
    if isinstance(expr, IntegerRing):
        return "Z"
    if isinstance(expr, Product):
        return " x ".join(
            f"({expr_label(f)})" if isinstance(f, Product) else expr_label(f)
            for f in expr.factors
        )
    if isinstance(expr, Quotient):
        gens = ",".join(str(g) for g in expr.ideal_gens)
        return f"{expr_label(expr.base)}/({gens})"
    if isinstance(expr, PolyTrunc):
        return f"{expr_label(expr.base)}[x]/(x^{expr.k})"
    if isinstance(expr, Poly):
        return f"{expr_label(expr.base)}[x]"
    if isinstance(expr, TrivExt):
        return f"{expr_label(expr.base)}∝{expr.module.label}"
    raise TypeError(f"not a ring expression: {expr!r}")


def is_finite_expr(expr) -> bool:
    """Structurally finite: no integers base/factor and no polynomial node."""
    if isinstance(expr, Zn):
        return True
    if isinstance(expr, (IntegerRing, Poly)):
        return False
    if isinstance(expr, Product):
        return all(is_finite_expr(f) for f in expr.factors)
    if isinstance(expr, Quotient):
        return is_finite_expr(expr.base)
    if isinstance(expr, PolyTrunc):
        return is_finite_expr(expr.base)
    if isinstance(expr, TrivExt):
        return is_finite_expr(expr.base) and expr.module.is_finite
    raise TypeError(f"not a ring expression: {expr!r}")


def expr_order(expr) -> int | None:
    """Order of the realized ring when structurally determined (quotients excluded)."""
    if isinstance(expr, Zn):
        return expr.n
    if isinstance(expr, Product):
        sizes = [expr_order(f) for f in expr.factors]
        return None if any(s is None for s in sizes) else math.prod(sizes)
    if isinstance(expr, PolyTrunc):
        base = expr_order(expr.base)
        return None if base is None else base**expr.k
    if isinstance(expr, TrivExt):
        base = expr_order(expr.base)
        if base is None or not expr.module.is_finite:
            return None
        return base * math.prod(expr.module.cyclic_moduli() or (1,))
    return None


@lru_cache(maxsize=None)
def _realize(expr, cap: int) -> FiniteRing | None:
    if isinstance(expr, Zn):
        return construct_zn(expr.n, cap)
    if isinstance(expr, (IntegerRing, Poly)):
        return None
    if isinstance(expr, Product):
        rings = [_realize(f, cap) for f in expr.factors]
        if any(r is None for r in rings):
            return None
        return construct_product(rings, cap)
    if isinstance(expr, Quotient):
        base = _realize(expr.base, cap)
        if base is None:
            return None
        for g in expr.ideal_gens:
            if g >= base.order:
                raise SchemaError(
                    f"quotient ideal generator {g} out of range for {base.label}"
                )
        ideal = spectrum.ideal_generated(base, expr.ideal_gens)
        return construct_quotient(base, ideal, cap)
    if isinstance(expr, PolyTrunc):
        base = _realize(expr.base, cap)
        return None if base is None else construct_poly_trunc(base, expr.k, cap)
    if isinstance(expr, TrivExt):
        base = _realize(expr.base, cap)
        if base is None or not expr.module.is_finite:
            return None
        module = module_over_zn(base, expr.module.cyclic_moduli())
        return construct_trivial_extension(base, module, cap)
    raise TypeError(f"not a ring expression: {expr!r}")


def realize_finite(expr, max_order: int | None = None) -> FiniteRing | None:
    """The concrete FiniteRing, or None when the expression is infinite or over the cap."""
    try:
        return _realize(expr, order_cap(max_order))
    except CapExceededError:
        return None


# ---------------------------------------------------------------------------
# module profiles


@dataclass(frozen=True)
class ModuleProfile:
    """Torsion behaviour of the idealized module over its base ring."""

    torsion: bool | None
    torsion_free: bool | None
    atorsion: bool | None
    provenance: str

    def as_json_dict(self) -> dict:
        return {
            "torsion": self.torsion,
            "torsion_free": self.torsion_free,
            "atorsion": self.atorsion,
            "provenance": self.provenance,
        }


def module_profile(base, module: ModuleExpr) -> ModuleProfile:
    """Exact torsion flags for the supported shapes (cyclic/integer factors over Z or Z_n)."""
    if isinstance(base, IntegerRing):
        torsion_free = all(f == ("integers",) or f == ("cyclic", 1) for f in module.factors)
        torsion = all(f[0] == "cyclic" for f in module.factors)
        # the integers are reduced, so the aregular scalars are the regular ones
        return ModuleProfile(
            torsion,
            torsion_free,
            torsion,
            "over the integers: cyclic factors are killed by their modulus (a regular"
            " scalar); integer factors are killed by no nonzero scalar",
        )
    if isinstance(base, Zn):
        trivial = module.is_trivial or not module.factors
        return ModuleProfile(
            trivial,
            True,
            trivial,
            "over a finite base the regular scalars are units, which kill nothing:"
            " every module is torsion-free, and only the zero module is (a)torsion",
        )
    return ModuleProfile(None, None, None, "module profile undecided for this base shape")


# ---------------------------------------------------------------------------
# the rule engine


@dataclass
class StructuralReport:
    expr: object
    label: str
    verdicts: dict[str, Verdict]
    module_profile: ModuleProfile | None = None

    def value(self, predicate: str) -> bool | None:
        return self.verdicts[predicate].value

    def as_json_dict(self) -> dict:
        out = {
            "ring": self.label,
            "verdicts": {n: self.verdicts[n].as_json_dict() for n in PREDICATES},
        }
        if self.module_profile is not None:
            out["module_profile"] = self.module_profile.as_json_dict()
        return out

    def to_json(self) -> str:
        return json.dumps(self.as_json_dict(), indent=2)


class _Facts:
    """Verdict accumulator: first sound rule to decide a predicate wins."""

    def __init__(self):
        self.verdicts: dict[str, Verdict] = {}

    def get(self, name: str) -> bool | None:
        v = self.verdicts.get(name)
        return None if v is None else v.value

    def set(self, name: str, value: bool, rule: str, detail: str) -> bool:
        if name in self.verdicts:
            return False
        self.verdicts[name] = Verdict(value, f"rule {rule}: {detail}")
        return True


_Z_BASE_FACTS: dict[str, tuple[bool, str]] = {
    "reduced": (True, "the integers have no nonzero nilpotents"),
    "nearly_reduced": (True, "reduced, so the aregular elements are exactly the regular ones"),
    "roughly_reduced": (True, "reduced: the kernel at the aregular set and the nilradical are both zero"),
    "vnr": (False, "2 has no quasi-inverse: 4a = 2 is unsolvable"),
    "zero_dimensional": (False, "no power of 2 is von Neumann regular"),
    "complemented": (True, "integral domain: 0 complements every nonzero element and 1 complements 0"),
    "semi_complemented": (True, "integral domain"),
    "pi_complemented": (True, "integral domain: b = 0 pairs every nonzero element; the total quotient field is zero-dimensional"),
    "almost_complemented": (True, "integral domain"),
    "roughly_complemented": (True, "integral domain: the complement pairs are also rough pairs"),
    "property_A": (True, "every nonzero ideal nZ contains the regular element n"),
    "annihilator_condition": (True, "Ann(a,b) is 0 = Ann(1) unless a = b = 0, where Ann(0) works"),
    "property_D": (True, "integral domain: every nonzero element is regular"),
    "property_D_flat": (True, "integral domain"),
    "unique_prime": (False, "2 is neither a unit nor nilpotent"),
    "local": (False, "2Z and 3Z are distinct maximal ideals"),
    "min_compact": (True, "the zero ideal is the unique minimal prime"),
}

# predicates that only depend on the ring modulo its nilradical, hence transfer
# across a nil-ideal extension T = S + I (T/N(T) = S/N(S), same prime spectrum)
_NIL_QUOTIENT_INVARIANT = (
    "almost_complemented",
    "property_D_flat",
    "unique_prime",
    "zero_dimensional",
    "local",
    "min_compact",
)

# predicates preserved by (and reflecting) finite products, factor by factor
_PRODUCT_CONJUNCTIVE = (
    "reduced",
    "nearly_reduced",
    "roughly_reduced",
    "vnr",
    "zero_dimensional",
    "complemented",
    "pi_complemented",
    "almost_complemented",
    "roughly_complemented",
    "min_compact",
)

# predicates a product of two or more rings (each with 1 != 0) always fails:
# the idempotent (1, 0, ..., 0) is neither nilpotent, regular, aregular nor a unit
_PRODUCT_ALWAYS_FALSE = ("property_D", "property_D_flat", "unique_prime", "local")


def classify_expr(
    expr, max_order: int | None = None, cap: int = DEFAULT_ENUM_CAP
) -> StructuralReport:
    """Three-valued classification of a ring expression.

    Leaf expressions (Z_n, quotients of leaves) go to the exhaustive engine;
    the integers use hard-coded base facts; composite nodes use structure
    rules over their children's reports plus generic closure rules.  What no
    rule decides stays Unknown.
    """
    label = expr_label(expr)

    if isinstance(expr, (Zn, Quotient)):
        ring = realize_finite(expr, max_order)
        if ring is None:
            return StructuralReport(
                expr,
                label,
                {
                    p: Verdict(None, "finite ring above the order cap; no structural rule applies")
                    for p in PREDICATES
                },
            )
        report = _classify.classify_ring(ring, cap)
        return StructuralReport(expr, label, dict(report.verdicts))

    if isinstance(expr, IntegerRing):
        verdicts = {
            p: Verdict(value, f"base fact (integers): {why}")
            for p, (value, why) in _Z_BASE_FACTS.items()
        }
        return StructuralReport(expr, label, verdicts)

    facts = _Facts()
    profile = None
    if isinstance(expr, Product):
        _product_rules(expr, facts, max_order, cap)
    elif isinstance(expr, TrivExt):
        profile = module_profile(expr.base, expr.module)
        _nil_extension_rules(expr, facts, profile, max_order, cap)
    elif isinstance(expr, PolyTrunc):
        _polytrunc_rules(expr, facts, max_order, cap)
    elif isinstance(expr, Poly):
        _poly_rules(expr, facts, max_order, cap)
    else:
        raise TypeError(f"not a ring expression: {expr!r}")

    _closure_fixpoint(facts)
    verdicts = {
        p: facts.verdicts.get(p, Verdict(None, "no applicable structural rule; left undecided"))
        for p in PREDICATES
    }
    return StructuralReport(expr, label, verdicts, profile)


def _product_rules(expr: Product, facts: _Facts, max_order, cap) -> None:
    children = [classify_expr(f, max_order, cap) for f in expr.factors]
    if len(children) == 1:
        for p in PREDICATES:
            v = children[0].verdicts[p]
            if v.value is not None:
                facts.set(p, v.value, "singleton-product", f"the product of one ring is that ring; {v.provenance}")
        return
    for p in _PRODUCT_CONJUNCTIVE:
        values = [c.value(p) for c in children]
        if any(v is False for v in values):
            i = values.index(False)
            facts.set(p, False, "product-componentwise", f"factor {children[i].label} fails {p}")
        elif all(v is True for v in values):
            facts.set(p, True, "product-componentwise", f"all {len(children)} factors satisfy {p}")
    for p in _PRODUCT_ALWAYS_FALSE:
        facts.set(
            p,
            False,
            "product-idempotent",
            "the idempotent that is 1 in one factor and 0 elsewhere is neither"
            " nilpotent, regular, aregular nor a unit",
        )


def _nil_extension_rules(expr: TrivExt, facts: _Facts, profile: ModuleProfile, max_order, cap) -> None:
    child = classify_expr(expr.base, max_order, cap)
    if expr.module.is_trivial:
        for p in PREDICATES:
            v = child.verdicts[p]
            if v.value is not None:
                facts.set(p, v.value, "trivial-module-identity", f"the zero module leaves the base untouched; {v.provenance}")
        return

    facts.set("reduced", False, "square-zero-ideal", "the nonzero module part squares to zero")
    for p in _NIL_QUOTIENT_INVARIANT:
        v = child.value(p)
        if v is not None:
            facts.set(
                p,
                v,
                "nil-quotient-transfer",
                f"adjoining a nil ideal leaves the reduced quotient and spectrum unchanged; base has {p}={v}",
            )
    d = child.value("property_D")
    tf = profile.torsion_free
    if d is not None and tf is not None:
        value = d and tf
        facts.set(
            "property_D",
            value,
            "nil-extension-dichotomy",
            f"with a nonzero nil ideal, the non-nilpotent elements are regular iff the"
            f" base has that property (base: {d}) and the module is torsion-free ({tf})",
        )
        facts.set(
            "semi_complemented",
            value,
            "nil-extension-dichotomy",
            "a ring with nonzero nilpotents is semi-complemented iff its non-nilpotent"
            " elements are all regular",
        )
    if child.value("unique_prime") is True:
        facts.set(
            "semi_complemented",
            True,
            "unit-or-nilpotent-idealization",
            "a base whose elements are units or nilpotents makes every idealization semi-complemented",
        )
    pi = child.value("pi_complemented")
    if pi is not None and tf is not None:
        facts.set(
            "pi_complemented",
            pi and tf,
            "nil-extension-pi",
            f"base pi-complemented: {pi}; module torsion-free: {tf}",
        )
    rough = child.value("roughly_complemented")
    if rough is not None and profile.atorsion is not None:
        facts.set(
            "roughly_complemented",
            rough and profile.atorsion,
            "square-zero-rough",
            f"for a square-zero module: base roughly complemented ({rough}) and module"
            f" atorsion ({profile.atorsion})",
        )


def _polytrunc_rules(expr: PolyTrunc, facts: _Facts, max_order, cap) -> None:
    child = classify_expr(expr.base, max_order, cap)
    facts.set("reduced", False, "square-zero-ideal", "x is a nonzero nilpotent")
    for p in _NIL_QUOTIENT_INVARIANT:
        v = child.value(p)
        if v is not None:
            facts.set(
                p,
                v,
                "nil-quotient-transfer",
                f"truncating a polynomial ring adjoins a nil ideal; base has {p}={v}",
            )
    d = child.value("property_D")
    if d is not None:
        facts.set(
            "property_D",
            d,
            "nil-extension-dichotomy",
            f"the ideal (x) is a free module over the base copy, hence torsion-free; base: {d}",
        )
        facts.set("semi_complemented", d, "nil-extension-dichotomy", "see property_D")
    pi = child.value("pi_complemented")
    if pi is not None:
        facts.set("pi_complemented", pi, "nil-extension-pi",
                  f"the ideal (x) is torsion-free; base pi-complemented: {pi}")
    if expr.k == 2:
        rough = child.value("roughly_complemented")
        if rough is not None:
            facts.set(
                "roughly_complemented",
                False,
                "square-zero-rough",
                "with x^2 = 0 the ideal (x) is a free module, never atorsion",
            )


def _poly_rules(expr: Poly, facts: _Facts, max_order, cap) -> None:
    child = classify_expr(expr.base, max_order, cap)
    red = child.value("reduced")
    if red is not None:
        facts.set(
            "reduced",
            red,
            "poly-coefficientwise-nilpotents",
            "a polynomial is nilpotent iff all its coefficients are",
        )
    d = child.value("property_D")
    if d is not None:
        facts.set(
            "property_D",
            d,
            "poly-zero-divisor-transfer",
            "splitting off the leading non-nilpotent coefficient writes every"
            f" non-nilpotent polynomial as nilpotent + regular; base: {d}",
        )
    dflat = child.value("property_D_flat")
    if dflat is not None:
        facts.set(
            "property_D_flat",
            dflat,
            "poly-zero-divisor-transfer",
            "the reduced quotient of the polynomial ring is the polynomial ring of"
            f" the reduced quotient; base: {dflat}",
        )
    facts.set(
        "property_A",
        True,
        "poly-content-annihilator",
        "a polynomial is a zero divisor iff a nonzero constant kills its content"
        " ideal, so dense finitely generated ideals contain regular polynomials",
    )
    mc = child.value("min_compact")
    if mc is not None:
        facts.set(
            "min_compact",
            mc,
            "poly-spectrum-transfer",
            "minimal primes of the polynomial ring are extensions of minimal primes of the base",
        )
    if red is not None and mc is not None:
        facts.set(
            "complemented",
            red and mc,
            "poly-complemented-content",
            f"the polynomial ring is complemented iff the base is reduced ({red}) with"
            f" compact minimal spectrum ({mc})",
        )
    facts.set("zero_dimensional", False, "poly-indeterminate", "no power of x is von Neumann regular")
    facts.set("vnr", False, "poly-indeterminate", "x has no quasi-inverse")
    facts.set(
        "unique_prime", False, "poly-indeterminate", "x is neither a unit nor nilpotent"
    )
    facts.set(
        "local",
        False,
        "poly-indeterminate",
        "x and 1 - x are non-units with unit sum, so non-units form no ideal",
    )


_GENERIC_TRIPLES = (
    # (whole, part_a, part_b, rule, detail): whole <=> part_a and part_b
    (
        "pi_complemented",
        "almost_complemented",
        "nearly_reduced",
        "pi-decomposition",
        "pi-complemented = almost complemented + nearly reduced",
    ),
    (
        "roughly_complemented",
        "almost_complemented",
        "roughly_reduced",
        "rough-decomposition",
        "roughly complemented = almost complemented + roughly reduced",
    ),
    (
        "complemented",
        "reduced",
        "almost_complemented",
        "reduced-collapse",
        "complemented = reduced + almost complemented",
    ),
    (
        "vnr",
        "reduced",
        "zero_dimensional",
        "vnr-decomposition",
        "von Neumann regular = reduced + zero-dimensional",
    ),
    (
        "reduced",
        "nearly_reduced",
        "roughly_reduced",
        "kernel-collapse",
        "the aregular kernel is zero and equals the nilradical iff the ring is reduced",
    ),
)


def _apply_biconditional(facts: _Facts, whole, a, b, rule, detail) -> bool:
    """Propagate `whole <=> a and b` in every determined direction."""
    changed = False
    w, va, vb = facts.get(whole), facts.get(a), facts.get(b)
    if va is not None and vb is not None and w is None:
        changed |= facts.set(whole, va and vb, rule, detail)
    elif w is True:
        if va is None:
            changed |= facts.set(a, True, rule, detail)
        if vb is None:
            changed |= facts.set(b, True, rule, detail)
    elif w is False:
        if va is True and vb is None:
            changed |= facts.set(b, False, rule, detail)
        if vb is True and va is None:
            changed |= facts.set(a, False, rule, detail)
    return changed


def _closure_fixpoint(facts: _Facts) -> None:
    changed = True
    while changed:
        changed = False
        for src, dst in HIERARCHY_ARROWS:
            if facts.get(src) is True and facts.get(dst) is None:
                changed |= facts.set(dst, True, "hierarchy-closure", f"{src} implies {dst}")
            if facts.get(dst) is False and facts.get(src) is None:
                changed |= facts.set(src, False, "hierarchy-closure", f"{src} implies {dst}")
        for whole, a, b, rule, detail in _GENERIC_TRIPLES:
            changed |= _apply_biconditional(facts, whole, a, b, rule, detail)
        # semi-complemented <=> zero-divisors-nilpotent or complemented
        semi, d, comp = (
            facts.get("semi_complemented"),
            facts.get("property_D"),
            facts.get("complemented"),
        )
        rule, detail = "semi-dichotomy", "semi-complemented = zero-divisors-nilpotent or complemented"
        if semi is None and (d is True or comp is True):
            changed |= facts.set("semi_complemented", True, rule, detail)
        if semi is None and d is False and comp is False:
            changed |= facts.set("semi_complemented", False, rule, detail)
        if semi is False:
            if d is None:
                changed |= facts.set("property_D", False, rule, detail)
            if comp is None:
                changed |= facts.set("complemented", False, rule, detail)
        if semi is True:
            if d is False and comp is None:
                changed |= facts.set("complemented", True, rule, detail)
            if comp is False and d is None:
                changed |= facts.set("property_D", True, rule, detail)
        if facts.get("zero_dimensional") is True and facts.get("pi_complemented") is None:
            changed |= facts.set(
                "pi_complemented",
                True,
                "zero-dimensional-quotient",
                "regular elements of a zero-dimensional ring are units, so it is its own"
                " total quotient ring",
            )


# ---------------------------------------------------------------------------
# cross-validation


@dataclass
class CrossValidationReport:
    label: str
    compared: dict[str, tuple[bool | None, bool]]
    gaps_filled: tuple[str, ...]
    disagreements: tuple[str, ...]
    structural: StructuralReport
    finite: _classify.PropertyReport


def cross_validate(
    expr, max_order: int | None = None, cap: int = DEFAULT_ENUM_CAP
) -> CrossValidationReport:
    """Replay rule-derived verdicts against brute force on a finite realization.

    Unknown structural verdicts are filled from the exhaustive engine and
    reported as rule-coverage gaps; a True/False disagreement raises
    CrossValidationError with both provenances.
    """
    ring = realize_finite(expr, max_order)
    if ring is None:
        raise ConstructionError(
            f"cross-validation needs a finite realization; {expr_label(expr)} has none within the cap"
        )
    structural = classify_expr(expr, max_order, cap)
    finite = _classify.classify_ring(ring, cap)
    compared = {}
    gaps = []
    disagreements = []
    for p in PREDICATES:
        s = structural.verdicts[p]
        f = finite.verdicts[p]
        compared[p] = (s.value, f.value)
        if s.value is None:
            gaps.append(p)
            structural.verdicts[p] = Verdict(
                f.value,
                f"rule-coverage gap, filled from the exhaustive engine: {f.provenance}",
                f.counterexample,
            )
        elif s.value != f.value:
            disagreements.append(
                f"{p}: structural {s.value} [{s.provenance}]"
                f" vs exhaustive {f.value} [{f.provenance}]"
            )
    report = CrossValidationReport(
        expr_label(expr), compared, tuple(gaps), tuple(disagreements), structural, finite
    )
    if disagreements:
        raise CrossValidationError(
            f"{expr_label(expr)}: rule engine disagrees with brute force:\n  "
            + "\n  ".join(disagreements)
        )
    return report


# ---------------------------------------------------------------------------
# symbolic element profiles over idealizations of Z and Z_n


def _normalize_symbolic_element(expr: TrivExt, elem):
    a, m = elem
    factors = expr.module.factors
    if isinstance(m, int):
        m = (m,)
    m = tuple(int(v) for v in m)
    if len(m) != len(factors):
        raise ValueError(
            f"module element {m} has {len(m)} coordinates, expected {len(factors)}"
        )
    normalized = []
    for f, v in zip(factors, m):
        normalized.append(v if f[0] == "integers" else v % f[1])
    return int(a), tuple(normalized)


def profile_symbolic_element(expr: TrivExt, elem) -> ElementProfile:
    """Exact element profile on an idealization of Z or Z_n, without tables.

    `elem` is a pair (a, m) with integer a and module element m (an int or a
    tuple, one coordinate per factor).  Over the integers the predicates are
    closed formulas; over Z_n they reduce to modular arithmetic with bounded
    power loops.  Any other expression shape is refused.
    """
    if not isinstance(expr, TrivExt):
        raise ValueError("symbolic profiles are only defined for idealization expressions")
    base = expr.base
    a, m = _normalize_symbolic_element(expr, elem)
    m_zero = all(v == 0 for v in m)
    factors = expr.module.factors

    if isinstance(base, IntegerRing):
        nilpotent = a == 0
        nil_index = (1 if m_zero else 2) if nilpotent else None
        regular = a != 0 and all(
            f[0] == "integers" or math.gcd(a, f[1]) == 1 for f in factors
        )
        aregular = a != 0
        unit = a in (1, -1)
        idempotent = a in (0, 1) and m_zero
        vn = a in (1, -1) or (a == 0 and m_zero)
        pi = a in (-1, 0, 1)
        pi_exp = (1 if (a != 0 or m_zero) else 2) if pi else None
        return ElementProfile(
            element=(a, m),
            is_unit=unit,
            is_regular=regular,
            is_aregular=aregular,
            is_nilpotent=nilpotent,
            is_idempotent=idempotent,
            is_vn_regular=vn,
            is_pi_regular=pi,
            nilpotency_index=nil_index,
            vn_witness=None,
            pi_exponent=pi_exp,
        )

    if isinstance(base, Zn):
        n = base.n
        a %= n
        moduli = expr.module.cyclic_moduli()
        # nilpotency of the base coordinate: some power of a divisible by n
        base_nil_index = None
        p, k = a % n, 1
        seen = set()
        while p not in seen:
            if p == 0:
                base_nil_index = k
                break
            seen.add(p)
            p = (p * a) % n
            k += 1
        nilpotent = base_nil_index is not None
        nil_index = None
        if nilpotent:
            j = base_nil_index
            # (a, m)^j = (a^j, j*a^(j-1)*m); one more step always kills the pair
            while True:
                tail_zero = all(
                    (j * pow(a, j - 1, mod) * v) % mod == 0
                    for mod, v in zip(moduli, m)
                ) if j > 0 else m_zero
                if pow(a, j, n) % n == 0 and tail_zero:
                    nil_index = j
                    break
                j += 1
        unit = math.gcd(a, n) == 1
        regular = unit       # finite base: injective multiplication is invertible
        aregular = unit      # finite base: aregular = unit
        idempotent = (a * a) % n == a and all(
            ((2 * a - 1) * v) % mod == 0 for mod, v in zip(moduli, m)
        )
        vn_witness = None
        size = math.prod(moduli) if moduli else 1
        for b in range(n):
            if (a * a * b) % n != a:
                continue
            for u_idx in range(size):
                u = _module_tuple(u_idx, moduli)
                if all(
                    (a * a * uv + 2 * a * b * v) % mod == v % mod
                    for mod, uv, v in zip(moduli, u, m)
                ):
                    vn_witness = (b, u)
                    break
            if vn_witness is not None:
                break
        pi_exp = None
        pw_a, pw_m, j = a, m, 1
        seen_pairs = set()
        while (pw_a, pw_m) not in seen_pairs:
            seen_pairs.add((pw_a, pw_m))
            if _zn_pair_is_vn(n, moduli, pw_a, pw_m):
                pi_exp = j
                break
            pw_a, pw_m = (pw_a * a) % n, tuple(
                (pw_a * v + a * uv) % mod for mod, v, uv in zip(moduli, m, pw_m)
            )
            j += 1
        return ElementProfile(
            element=(a, m),
            is_unit=unit,
            is_regular=regular,
            is_aregular=aregular,
            is_nilpotent=nilpotent,
            is_idempotent=idempotent,
            is_vn_regular=vn_witness is not None,
            is_pi_regular=pi_exp is not None,
            nilpotency_index=nil_index,
            vn_witness=None,
            pi_exponent=pi_exp,
        )

    raise ValueError("symbolic profiles support idealizations of Z and Z_n only")


def _module_tuple(idx: int, moduli) -> tuple[int, ...]:
    out = []
    for mod in reversed(moduli):
        out.append(idx % mod)
        idx //= mod
    return tuple(reversed(out))


def _zn_pair_is_vn(n, moduli, a, m) -> bool:
    size = math.prod(moduli) if moduli else 1
    for b in range(n):
        if (a * a * b) % n != a % n:
            continue
        for u_idx in range(size):
            u = _module_tuple(u_idx, moduli)
            if all(
                (a * a * uv + 2 * a * b * v) % mod == v % mod
                for mod, uv, v in zip(moduli, u, m)
            ):
                return True
    return False


# ---------------------------------------------------------------------------
# polynomial content classification (McCoy-style zero-divisor criterion)


def poly_content_regularity(ring: FiniteRing, coeffs) -> tuple[str, Ideal, Ideal]:
    """Classify a polynomial over R by its content ideal.

    Returns (classification, content ideal, annihilator of the content) with
    classification one of "regular", "zero_divisor", "nilpotent": nilpotent
    iff all coefficients are nilpotent, regular iff the content ideal has zero
    annihilator, zero divisor otherwise (a nonzero constant kills it).
    """
    coeffs = [int(c) for c in coeffs]
    if not coeffs:
        raise ValueError("a polynomial needs at least one coefficient")
    content = spectrum.ideal_generated(ring, coeffs)
    ann = spectrum.annihilator(ring, coeffs)
    nil = flags.nilpotent_mask(ring)
    if all((nil >> c) & 1 for c in coeffs):
        kind = "nilpotent"
    elif ann.members == 1 << ring.zero:
        kind = "regular"
    else:
        kind = "zero_divisor"
    return kind, content, ann


def polynomial_cofactor(ring: FiniteRing, coeffs, g_len: int) -> tuple[int, ...] | None:
    """Least nonzero cofactor g (as g_len coefficients) with f*g = 0, or None."""
    return kernels.cofactor_search(ring.mul, ring.add, [int(c) for c in coeffs], g_len, ring.zero)
